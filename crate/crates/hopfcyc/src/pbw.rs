//! The universal enveloping algebra U(g) in the PBW basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{add_to, axpy, binomial, factorial, Q};
use crate::lie::{format_combination, LieAlgebra, LieVec};
use crate::text::{parse_combination, TextError};

/// Exponent vector X_1^{e_1} ... X_N^{e_N}.
pub type Mono = Vec<u32>;
pub type PbwElement = BTreeMap<Mono, Q>;
/// Element of U(g)^{(x) k}, keyed by the tuple of monomials.
pub type PbwTensor = BTreeMap<Vec<Mono>, Q>;

pub const DEFAULT_MAX_DEGREE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PbwError {
    #[error("degree cap exceeded: needs {needed}, cap is {cap}")]
    DegreeCap { needed: usize, cap: usize },
    #[error("element is not in the image of theta_{k}; residual {residual}")]
    NotSymmetric { k: usize, residual: String },
    #[error("{0}")]
    Text(#[from] TextError),
}

pub fn mono_degree(m: &Mono) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

pub fn degree(u: &PbwElement) -> usize {
    u.keys().map(mono_degree).max().unwrap_or(0)
}

pub fn scalar(c: Q, n: usize) -> PbwElement {
    let mut u = PbwElement::new();
    add_to(&mut u, vec![0; n], c);
    u
}

#[derive(Debug)]
pub struct Uea {
    pub lie: LieAlgebra,
    pub max_degree: usize,
    cache: RwLock<HashMap<(Mono, usize), Arc<PbwElement>>>,
}

impl Clone for Uea {
    fn clone(&self) -> Self {
        Uea::new(self.lie.clone(), self.max_degree)
    }
}

impl Uea {
    pub fn new(lie: LieAlgebra, max_degree: usize) -> Self {
        Self { lie, max_degree, cache: RwLock::new(HashMap::new()) }
    }

    pub fn n(&self) -> usize {
        self.lie.dim()
    }

    pub fn one(&self) -> PbwElement {
        scalar(Q::one(), self.n())
    }

    pub fn zero_mono(&self) -> Mono {
        vec![0; self.n()]
    }

    pub fn gen(&self, i: usize) -> PbwElement {
        let mut m = self.zero_mono();
        m[i] = 1;
        let mut u = PbwElement::new();
        u.insert(m, Q::one());
        u
    }

    pub fn from_lie(&self, v: &LieVec) -> PbwElement {
        let mut u = PbwElement::new();
        for (i, c) in v {
            let mut m = self.zero_mono();
            m[*i] = 1;
            add_to(&mut u, m, c.clone());
        }
        u
    }

    pub fn mono(&self, exps: &[(usize, u32)]) -> Mono {
        let mut m = self.zero_mono();
        for &(i, e) in exps {
            m[i] += e;
        }
        m
    }

    pub fn check_cap(&self, needed: usize) -> Result<(), PbwError> {
        if needed > self.max_degree {
            Err(PbwError::DegreeCap { needed, cap: self.max_degree })
        } else {
            Ok(())
        }
    }

    /// m * X_i in normal form.
    fn mono_times_gen(&self, m: &Mono, i: usize) -> Arc<PbwElement> {
        let key = (m.clone(), i);
        if let Some(r) = self.cache.read().unwrap().get(&key) {
            return r.clone();
        }
        let last = m.iter().rposition(|&e| e > 0);
        let result = match last {
            Some(j) if j > i => {
                // m = m' X_j and X_j X_i = X_i X_j + [X_j, X_i]
                let mut mp = m.clone();
                mp[j] -= 1;
                let mut out = PbwElement::new();
                let head = self.mono_times_gen(&mp, i);
                for (t, c) in head.iter() {
                    axpy(&mut out, c, &self.mono_times_gen(t, j));
                }
                for (k, c) in self.lie.bracket_basis(j, i) {
                    axpy(&mut out, c, &self.mono_times_gen(&mp, *k));
                }
                out
            }
            _ => {
                let mut r = m.clone();
                r[i] += 1;
                let mut out = PbwElement::new();
                out.insert(r, Q::one());
                out
            }
        };
        let result = Arc::new(result);
        self.cache.write().unwrap().insert(key, result.clone());
        result
    }

    pub fn mul_gen_right(&self, a: &PbwElement, i: usize) -> PbwElement {
        let mut out = PbwElement::new();
        for (m, c) in a {
            axpy(&mut out, c, &self.mono_times_gen(m, i));
        }
        out
    }

    fn mul_unchecked(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut out = PbwElement::new();
        for (mb, cb) in b {
            let mut acc = a.clone();
            for (g, &e) in mb.iter().enumerate() {
                for _ in 0..e {
                    acc = self.mul_gen_right(&acc, g);
                }
            }
            axpy(&mut out, cb, &acc);
        }
        out
    }

    pub fn multiply(&self, a: &PbwElement, b: &PbwElement) -> Result<PbwElement, PbwError> {
        if a.is_empty() || b.is_empty() {
            return Ok(PbwElement::new());
        }
        self.check_cap(degree(a) + degree(b))?;
        Ok(self.mul_unchecked(a, b))
    }

    /// Product of a word of basis generators.
    pub fn word(&self, w: &[usize]) -> Result<PbwElement, PbwError> {
        self.check_cap(w.len())?;
        let mut acc = self.one();
        for &g in w {
            acc = self.mul_gen_right(&acc, g);
        }
        Ok(acc)
    }

    pub fn mono_word(m: &Mono) -> Vec<usize> {
        let mut w = Vec::new();
        for (g, &e) in m.iter().enumerate() {
            for _ in 0..e {
                w.push(g);
            }
        }
        w
    }

    pub fn counit(&self, u: &PbwElement) -> Q {
        u.get(&self.zero_mono()).cloned().unwrap_or_else(Q::zero)
    }

    /// Delta^{(k)} of a monomial: sum over splittings of each exponent.
    pub fn coproduct_mono_n(&self, m: &Mono, k: usize) -> PbwTensor {
        let mut out: PbwTensor = BTreeMap::new();
        out.insert(vec![self.zero_mono(); k], Q::one());
        for (g, &e) in m.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let splits = compositions(e, k);
            let mut next = PbwTensor::new();
            for (t, c) in &out {
                for s in &splits {
                    let mut t2 = t.clone();
                    let mut coef = BigInt::one();
                    let mut rest = e;
                    for (slot, &a) in s.iter().enumerate() {
                        t2[slot][g] += a;
                        coef *= binomial(rest, a);
                        rest -= a;
                    }
                    add_to(&mut next, t2, c * Q::from_integer(coef));
                }
            }
            out = next;
        }
        out
    }

    pub fn coproduct_n(&self, u: &PbwElement, k: usize) -> PbwTensor {
        let mut out = PbwTensor::new();
        for (m, c) in u {
            axpy(&mut out, c, &self.coproduct_mono_n(m, k));
        }
        out
    }

    pub fn coproduct(&self, u: &PbwElement) -> PbwTensor {
        self.coproduct_n(u, 2)
    }

    pub fn antipode(&self, u: &PbwElement) -> PbwElement {
        let mut out = PbwElement::new();
        for (m, c) in u {
            let mut w = Self::mono_word(m);
            w.reverse();
            let mut acc = self.one();
            for &g in &w {
                acc = self.mul_gen_right(&acc, g);
            }
            let sign = if w.len() % 2 == 0 { c.clone() } else { -c.clone() };
            axpy(&mut out, &sign, &acc);
        }
        out
    }

    /// Sum over all k! orderings of the word of `m`, normal-ordered.
    pub fn theta_symmetrize(&self, m: &Mono) -> Result<PbwElement, PbwError> {
        let w = Self::mono_word(m);
        self.check_cap(w.len())?;
        let mut out = PbwElement::new();
        let mut perm: Vec<usize> = (0..w.len()).collect();
        loop {
            let word: Vec<usize> = perm.iter().map(|&p| w[p]).collect();
            axpy(&mut out, &Q::one(), &self.word(&word)?);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(out)
    }

    pub fn theta_inverse(&self, k: usize, s: &PbwElement) -> Result<PbwElement, PbwError> {
        let kf = Q::from_integer(factorial(k));
        let mut cand = PbwElement::new();
        for (m, c) in s {
            if mono_degree(m) == k {
                cand.insert(m.clone(), c / &kf);
            }
        }
        let mut image = PbwElement::new();
        for (m, c) in &cand {
            axpy(&mut image, c, &self.theta_symmetrize(m)?);
        }
        let residual = crate::exact::sub_maps(s, &image);
        if !residual.is_empty() {
            return Err(PbwError::NotSymmetric { k, residual: self.format(&residual) });
        }
        Ok(cand)
    }

    /// ad(X_i)(u) = X_i u - u X_i
    pub fn adjoint(&self, i: usize, u: &PbwElement) -> Result<PbwElement, PbwError> {
        if u.is_empty() {
            return Ok(PbwElement::new());
        }
        let x = self.gen(i);
        let left = self.multiply(&x, u)?;
        let right = self.multiply(u, &x)?;
        Ok(crate::exact::sub_maps(&left, &right))
    }

    pub fn format_mono(&self, m: &Mono) -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| if e == 1 { self.lie.basis[g].clone() } else { format!("{}^{}", self.lie.basis[g], e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn format(&self, u: &PbwElement) -> String {
        format_combination(u.iter().rev().map(|(m, c)| (self.format_mono(m), c.clone())))
    }

    pub fn format_tensor(&self, t: &PbwTensor) -> String {
        format_combination(
            t.iter().map(|(ms, c)| (ms.iter().map(|m| self.format_mono(m)).collect::<Vec<_>>().join(" ⊗ "), c.clone())),
        )
    }

    /// Parse e.g. `3/2*X^2*Y - Z`; factors may appear in any order and are multiplied.
    pub fn parse(&self, s: &str) -> Result<PbwElement, PbwError> {
        let mut out = PbwElement::new();
        for t in parse_combination(s)? {
            let mut word = Vec::new();
            for (name, p) in &t.factors {
                let g = self.lie.index_of(name).ok_or_else(|| TextError::UnknownSymbol(name.clone()))?;
                for _ in 0..*p {
                    word.push(g);
                }
            }
            axpy(&mut out, &t.coeff, &self.word(&word)?);
        }
        Ok(out)
    }
}

/// All ways to write e as an ordered sum of k naturals.
pub fn compositions(e: u32, k: usize) -> Vec<Vec<u32>> {
    if k == 1 {
        return vec![vec![e]];
    }
    let mut out = Vec::new();
    for a in 0..=e {
        for mut rest in compositions(e - a, k - 1) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Sign of a permutation given as a list of images.
pub fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn tensor_mul_pointwise(
    u: &Uea,
    a: &PbwTensor,
    b: &PbwTensor,
) -> PbwTensor {
    let mut out = PbwTensor::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let mut partial: PbwTensor = BTreeMap::new();
            partial.insert(Vec::new(), ca * cb);
            for (ma, mb) in ka.iter().zip(kb) {
                let mut x = PbwElement::new();
                x.insert(ma.clone(), Q::one());
                let mut y = PbwElement::new();
                y.insert(mb.clone(), Q::one());
                let prod = u.mul_unchecked(&x, &y);
                let mut next = PbwTensor::new();
                for (key, c) in &partial {
                    for (m, d) in &prod {
                        let mut k2 = key.clone();
                        k2.push(m.clone());
                        add_to(&mut next, k2, c * d);
                    }
                }
                partial = next;
            }
            for (k, c) in partial {
                add_to(&mut out, k, c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::qi;
    use crate::lie::{gl_aff, sl2_xyz};

    fn aff() -> Uea {
        Uea::new(
            LieAlgebra::from_brackets("gl(1)-aff", vec!["X".into(), "Y".into()], vec![(1, 0, crate::lie::unit(0))]),
            6,
        )
    }

    #[test]
    fn basic_products() {
        let u = aff();
        assert_eq!(u.multiply(&u.gen(1), &u.gen(0)).unwrap(), u.parse("X*Y + X").unwrap());
        let s = Uea::new(sl2_xyz(), 6);
        let zx = s.multiply(&s.gen(2), &s.gen(0)).unwrap();
        let mut expect = PbwElement::new();
        expect.insert(vec![1, 0, 1], qi(1));
        expect.insert(vec![0, 1, 0], qi(1));
        assert_eq!(zx, expect);
        assert_eq!(s.multiply(&s.one(), &zx).unwrap(), zx);
    }

    #[test]
    fn coproduct_antipode() {
        let u = aff();
        let xy = u.parse("X*Y").unwrap();
        assert_eq!(u.coproduct(&xy).len(), 4);
        assert_eq!(u.antipode(&xy), u.parse("X*Y + X").unwrap());
    }

    #[test]
    fn theta() {
        let u = aff();
        let t = u.theta_symmetrize(&vec![1, 1]).unwrap();
        assert_eq!(t, u.parse("2*X*Y + X").unwrap());
        assert_eq!(u.theta_inverse(2, &t).unwrap(), u.parse("X*Y").unwrap());
        assert!(u.theta_inverse(2, &u.parse("X*Y").unwrap()).is_err());
    }

    #[test]
    fn ad_sign() {
        let u = aff();
        let x2 = u.parse("X^2").unwrap();
        assert_eq!(u.adjoint(1, &x2).unwrap(), u.parse("2*X^2").unwrap());
        assert!(u.adjoint(0, &u.one()).unwrap().is_empty());
    }

    #[test]
    fn cap_enforced() {
        let u = Uea::new(gl_aff(1), 2);
        let x2 = u.parse("X1^2").unwrap();
        assert!(matches!(u.multiply(&x2, &u.gen(0)), Err(PbwError::DegreeCap { needed: 3, cap: 2 })));
    }
}
