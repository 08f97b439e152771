//! The bicocyclic module V ⊗ F^{⊗p} ⊗ U^{⊗q} of a bicrossed product F ⋈ U,
//! its total mixed complex, the Alexander–Whitney map to the diagonal and Ψ
//! from the diagonal to C(H, V).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::cyclic::HChain;
use super::ComplexError;
use crate::exact::{add_to, axpy, qi, scaled, sub_maps, SparseVec, Q};
use crate::hopf::{poly_mul, Bicrossed, FMono, FPoly, HMono, HopfElement};
use crate::pbw::{Mono, PbwElement, PbwTensor};
use crate::sayd::HModule;

/// v ⊗ f^1 ⊗ … ⊗ f^p ⊗ u^1 ⊗ … ⊗ u^q
pub type TotKey = (usize, Vec<FMono>, Vec<Mono>);
pub type TotChain = BTreeMap<TotKey, Q>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// along the F^{⊗p} factors
    F,
    /// along the U^{⊗q} factors
    U,
}

#[derive(Debug, Clone, Copy)]
pub struct Bicomplex<'a> {
    pub m: &'a HModule,
}

fn fpoly(m: &FMono) -> FPoly {
    let mut p = FPoly::new();
    p.insert(m.clone(), Q::one());
    p
}

fn pbw(m: &Mono) -> PbwElement {
    let mut p = PbwElement::new();
    p.insert(m.clone(), Q::one());
    p
}

fn sign(i: usize) -> Q {
    if i % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

/// Multiply a list of polynomials factorwise into a list of monomial lists.
fn expand<T: Ord + Clone>(factors: &[BTreeMap<T, Q>]) -> BTreeMap<Vec<T>, Q> {
    let mut out: BTreeMap<Vec<T>, Q> = BTreeMap::new();
    out.insert(Vec::new(), Q::one());
    for f in factors {
        let mut next = BTreeMap::new();
        for (k, c) in &out {
            for (m, d) in f {
                let mut k2 = k.clone();
                k2.push(m.clone());
                add_to(&mut next, k2, c * d);
            }
        }
        out = next;
    }
    out
}

impl<'a> Bicomplex<'a> {
    pub fn new(m: &'a HModule) -> Self {
        Self { m }
    }

    fn h(&self) -> &Bicrossed {
        &self.m.hopf
    }

    fn unit_vec(i: usize) -> SparseVec {
        let mut e = SparseVec::new();
        e.insert(i, Q::one());
        e
    }

    pub fn bidegree(k: &TotKey) -> (usize, usize) {
        (k.1.len(), k.2.len())
    }

    /// Split into bihomogeneous components.
    pub fn components(x: &TotChain) -> BTreeMap<(usize, usize), TotChain> {
        let mut out: BTreeMap<(usize, usize), TotChain> = BTreeMap::new();
        for (k, c) in x {
            out.entry(Self::bidegree(k)).or_default().insert(k.clone(), c.clone());
        }
        out
    }

    /// Coaction of U^{⊗q} on the F side: u^k ↦ u^k<0>, collecting Π_k S(u^k<1>).
    fn u_coaction(&self, us: &[Mono]) -> Vec<(Vec<Mono>, FPoly, Q)> {
        let h = self.h();
        let mut acc: Vec<(Vec<Mono>, FPoly, Q)> = vec![(Vec::new(), h.f.one(), Q::one())];
        for u in us {
            let nab = h.coaction_mono(u);
            let mut next = Vec::new();
            for (ms, f, c) in &acc {
                for ((u0, u1), d) in nab.iter() {
                    let mut ms2 = ms.clone();
                    ms2.push(u0.clone());
                    next.push((ms2, poly_mul(f, &h.f.antipode_poly(&fpoly(u1))), c * d));
                }
            }
            acc = next;
        }
        acc
    }

    // ---- F direction

    pub fn f_coface(&self, i: usize, x: &TotChain) -> TotChain {
        let h = self.h();
        let mut out = TotChain::new();
        for ((v, fs, us), c) in x {
            let p = fs.len();
            if i == 0 {
                let mut f2 = vec![h.fzero()];
                f2.extend(fs.iter().cloned());
                add_to(&mut out, (*v, f2, us.clone()), c.clone());
            } else if i <= p {
                for (pair, d) in h.f_coproduct_mono(&fs[i - 1]).iter() {
                    let mut f2 = fs[..i - 1].to_vec();
                    f2.extend(pair.iter().cloned());
                    f2.extend(fs[i..].iter().cloned());
                    add_to(&mut out, (*v, f2, us.clone()), c * d);
                }
            } else {
                let uco = self.u_coaction(us);
                for (((beta, w), u0), d) in &self.m.coaction[*v] {
                    if w.iter().any(|&e| e > 0) {
                        continue;
                    }
                    let _ = u0;
                    for (u_new, sf, e) in &uco {
                        let newf = poly_mul(sf, &fpoly(beta));
                        for (fm, g) in newf {
                            let mut f2 = fs.clone();
                            f2.push(fm);
                            add_to(&mut out, (*u0, f2, u_new.clone()), c * d * e * g);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn f_codegeneracy(&self, j: usize, x: &TotChain) -> TotChain {
        let h = self.h();
        let mut out = TotChain::new();
        for ((v, fs, us), c) in x {
            let e = h.f.counit_poly(&fpoly(&fs[j]));
            if e.is_zero() {
                continue;
            }
            let mut f2 = fs.clone();
            f2.remove(j);
            add_to(&mut out, (*v, f2, us.clone()), c * e);
        }
        out
    }

    /// v ⊗ f^1 ⊗ rest ↦ v ◁ f^1(1) ⊗ S(f^1(2)) · rest ⊗ ũ
    fn f_shift(&self, x: &TotChain) -> TotChain {
        let h = self.h();
        let mut out = TotChain::new();
        for ((v, fs, us), c) in x {
            if fs.is_empty() {
                continue;
            }
            let rest = &fs[1..];
            for (pair, d) in h.f_coproduct_mono(&fs[0]).iter() {
                let acted = self.m.act_mono(&Self::unit_vec(*v), &(pair[0].clone(), h.uzero()), true);
                if acted.is_empty() {
                    continue;
                }
                let s = h.f.antipode_poly(&fpoly(&pair[1]));
                let moved: BTreeMap<Vec<FMono>, Q> = if rest.is_empty() {
                    let e = h.f.counit_poly(&s);
                    let mut t = BTreeMap::new();
                    if !e.is_zero() {
                        t.insert(Vec::new(), e);
                    }
                    t
                } else {
                    let legs = h.f_coproduct_n(&s, rest.len());
                    let mut t = BTreeMap::new();
                    for (key, e) in legs {
                        let factors: Vec<FPoly> =
                            key.iter().zip(rest).map(|(a, b)| poly_mul(&fpoly(a), &fpoly(b))).collect();
                        for (k2, g) in expand(&factors) {
                            add_to(&mut t, k2, &e * g);
                        }
                    }
                    t
                };
                for (w, a) in &acted {
                    for (k, g) in &moved {
                        add_to(&mut out, (*w, k.clone(), us.clone()), c * d * a * g);
                    }
                }
            }
        }
        out
    }

    pub fn f_tau(&self, x: &TotChain) -> TotChain {
        let mut out = TotChain::new();
        for (k, c) in x {
            let p = k.1.len();
            let mut one = TotChain::new();
            one.insert(k.clone(), c.clone());
            if p == 0 {
                axpy(&mut out, &Q::one(), &one);
            } else {
                axpy(&mut out, &Q::one(), &self.f_shift(&self.f_coface(p + 1, &one)));
            }
        }
        out
    }

    // ---- U direction

    pub fn u_coface(&self, i: usize, x: &TotChain) -> TotChain {
        let h = self.h();
        let mut out = TotChain::new();
        for ((v, fs, us), c) in x {
            let q = us.len();
            if i == 0 {
                let mut u2 = vec![h.uzero()];
                u2.extend(us.iter().cloned());
                add_to(&mut out, (*v, fs.clone(), u2), c.clone());
            } else if i <= q {
                for (pair, d) in h.u.coproduct_mono_n(&us[i - 1], 2) {
                    let mut u2 = us[..i - 1].to_vec();
                    u2.extend(pair);
                    u2.extend(us[i..].iter().cloned());
                    add_to(&mut out, (*v, fs.clone(), u2), c * d);
                }
            } else {
                for (((f, w), u0), d) in &self.m.coaction[*v] {
                    if f.iter().any(|&e| e > 0) {
                        continue;
                    }
                    let mut u2 = us.clone();
                    u2.push(w.clone());
                    add_to(&mut out, (*u0, fs.clone(), u2), c * d);
                }
            }
        }
        out
    }

    pub fn u_codegeneracy(&self, j: usize, x: &TotChain) -> TotChain {
        let h = self.h();
        let mut out = TotChain::new();
        for ((v, fs, us), c) in x {
            let e = h.u.counit(&pbw(&us[j]));
            if e.is_zero() {
                continue;
            }
            let mut u2 = us.clone();
            u2.remove(j);
            add_to(&mut out, (*v, fs.clone(), u2), c * e);
        }
        out
    }

    /// u ▷ (f^1 ⊗ … ⊗ f^p) through Δ^{(p)}(1 ⋈ u), with g ⋈ w acting as g·(w ▷ f).
    pub fn u_act_ftensor(&self, u: &PbwElement, fs: &[FMono]) -> BTreeMap<Vec<FMono>, Q> {
        let h = self.h();
        let mut out = BTreeMap::new();
        if fs.is_empty() {
            let e = h.u.counit(u);
            if !e.is_zero() {
                out.insert(Vec::new(), e);
            }
            return out;
        }
        let hu = h.from_u(u);
        for (legs, c) in h.coproduct_n(&hu, fs.len()) {
            let factors: Vec<FPoly> =
                legs.iter().zip(fs).map(|((g, w), f)| poly_mul(&fpoly(g), &h.act_mono(w, f))).collect();
            if factors.iter().any(|f| f.is_empty()) {
                continue;
            }
            for (k, d) in expand(&factors) {
                add_to(&mut out, k, &c * d);
            }
        }
        out
    }

    /// Left diagonal multiplication of U on U^{⊗k}.
    fn u_diag(&self, u: &PbwElement, us: &[Mono]) -> PbwTensor {
        let h = self.h();
        let mut out = PbwTensor::new();
        if us.is_empty() {
            let e = h.u.counit(u);
            if !e.is_zero() {
                out.insert(Vec::new(), e);
            }
            return out;
        }
        for (legs, c) in h.u.coproduct_n(u, us.len()) {
            let factors: Vec<PbwElement> = legs
                .iter()
                .zip(us)
                .map(|(a, b)| h.u.multiply(&pbw(a), &pbw(b)).expect("uncapped"))
                .collect();
            for (k, d) in expand(&factors) {
                add_to(&mut out, k, &c * d);
            }
        }
        out
    }

    /// v ⊗ f̃ ⊗ u^1 ⊗ rest ↦ v ◁ u^1(2) ⊗ S(u^1(1)) ▷ f̃ ⊗ S(u^1(3)) · rest
    fn u_shift(&self, x: &TotChain) -> TotChain {
        let h = self.h();
        let mut out = TotChain::new();
        for ((v, fs, us), c) in x {
            if us.is_empty() {
                continue;
            }
            let rest = &us[1..];
            for (legs, d) in h.u.coproduct_mono_n(&us[0], 3) {
                let acted = self.m.act_mono(&Self::unit_vec(*v), &(h.fzero(), legs[1].clone()), true);
                if acted.is_empty() {
                    continue;
                }
                let fpart = self.u_act_ftensor(&h.u.antipode(&pbw(&legs[0])), fs);
                if fpart.is_empty() {
                    continue;
                }
                let upart = self.u_diag(&h.u.antipode(&pbw(&legs[2])), rest);
                for (w, a) in &acted {
                    for (fk, e) in &fpart {
                        for (uk, g) in &upart {
                            add_to(&mut out, (*w, fk.clone(), uk.clone()), c * &d * a * e * g);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn u_tau(&self, x: &TotChain) -> TotChain {
        let mut out = TotChain::new();
        for (k, c) in x {
            let q = k.2.len();
            let mut one = TotChain::new();
            one.insert(k.clone(), c.clone());
            if q == 0 {
                axpy(&mut out, &Q::one(), &one);
            } else {
                axpy(&mut out, &Q::one(), &self.u_shift(&self.u_coface(q + 1, &one)));
            }
        }
        out
    }

    // ---- generic per-direction operators

    pub fn coface(&self, dir: Direction, i: usize, x: &TotChain) -> TotChain {
        match dir {
            Direction::F => self.f_coface(i, x),
            Direction::U => self.u_coface(i, x),
        }
    }

    pub fn codegeneracy(&self, dir: Direction, j: usize, x: &TotChain) -> TotChain {
        match dir {
            Direction::F => self.f_codegeneracy(j, x),
            Direction::U => self.u_codegeneracy(j, x),
        }
    }

    pub fn tau(&self, dir: Direction, x: &TotChain) -> TotChain {
        match dir {
            Direction::F => self.f_tau(x),
            Direction::U => self.u_tau(x),
        }
    }

    pub fn extra_degeneracy(&self, dir: Direction, x: &TotChain) -> TotChain {
        match dir {
            Direction::F => self.f_shift(x),
            Direction::U => self.u_shift(x),
        }
    }

    fn len(dir: Direction, k: &TotKey) -> usize {
        match dir {
            Direction::F => k.1.len(),
            Direction::U => k.2.len(),
        }
    }

    pub fn hochschild(&self, dir: Direction, x: &TotChain) -> TotChain {
        let mut out = TotChain::new();
        for (k, c) in x {
            let n = Self::len(dir, k);
            let mut one = TotChain::new();
            one.insert(k.clone(), c.clone());
            for i in 0..=n + 1 {
                axpy(&mut out, &sign(i), &self.coface(dir, i, &one));
            }
        }
        out
    }

    /// (Σ_{i=0}^{n−1} (−1)^{(n−1)i} τ^i) σ_{n−1} τ in the given direction.
    pub fn connes(&self, dir: Direction, x: &TotChain) -> TotChain {
        let mut out = TotChain::new();
        for (k, c) in x {
            let n = Self::len(dir, k);
            if n == 0 {
                continue;
            }
            let mut one = TotChain::new();
            one.insert(k.clone(), c.clone());
            let mut y = self.codegeneracy(dir, n - 1, &self.tau(dir, &one));
            for i in 0..n {
                axpy(&mut out, &sign((n - 1) * i), &y);
                y = self.tau(dir, &y);
            }
        }
        out
    }

    /// b_T = b_U + (−1)^q b_F on the (p, q) component, q the U-degree.
    pub fn b_total(&self, x: &TotChain) -> TotChain {
        let mut out = TotChain::new();
        for ((_, q), comp) in Self::components(x) {
            axpy(&mut out, &Q::one(), &self.hochschild(Direction::U, &comp));
            axpy(&mut out, &sign(q), &self.hochschild(Direction::F, &comp));
        }
        out
    }

    /// B_T = B_U + (−1)^q B_F
    pub fn connes_total(&self, x: &TotChain) -> TotChain {
        let mut out = TotChain::new();
        for ((_, q), comp) in Self::components(x) {
            axpy(&mut out, &Q::one(), &self.connes(Direction::U, &comp));
            axpy(&mut out, &sign(q), &self.connes(Direction::F, &comp));
        }
        out
    }

    // ---- Alexander–Whitney and Ψ

    /// AW_{p,q} = (−1)^{p+q} (∂^F_0)^q ∂^U_n ⋯ ∂^U_{q+1}
    pub fn alexander_whitney(&self, x: &TotChain) -> TotChain {
        let mut out = TotChain::new();
        for ((p, q), comp) in Self::components(x) {
            let n = p + q;
            let mut y = comp;
            for i in q + 1..=n {
                y = self.u_coface(i, &y);
            }
            for _ in 0..q {
                y = self.f_coface(0, &y);
            }
            axpy(&mut out, &sign(n), &y);
        }
        out
    }

    /// u ↦ u<0> ⊗ u<1> ⊗ … ⊗ u<m>, the coaction followed by Δ^{(m)} on F.
    fn iterated_coaction(&self, u: &Mono, m: usize) -> Vec<(Mono, Vec<FMono>, Q)> {
        let h = self.h();
        if m == 0 {
            return vec![(u.clone(), Vec::new(), Q::one())];
        }
        let mut out = Vec::new();
        for ((u0, u1), c) in h.coaction_mono(u).iter() {
            for (legs, d) in h.f_coproduct_n(&fpoly(u1), m) {
                out.push((u0.clone(), legs, c * d));
            }
        }
        out
    }

    fn psi_like(&self, v: usize, fs: &[FMono], us: &[Mono], inverse: bool) -> BTreeMap<(Vec<FMono>, Vec<Mono>), Q> {
        let h = self.h();
        let n = fs.len();
        // choice of iterated coaction for each u^j, j < n
        let mut acc: Vec<(Vec<FPoly>, Vec<Mono>, Q)> =
            vec![(fs.iter().map(fpoly).collect(), Vec::new(), Q::one())];
        for (j, u) in us.iter().enumerate() {
            let m = n - 1 - j;
            let it = self.iterated_coaction(u, m);
            let mut next = Vec::new();
            for (fpolys, u0s, c) in &acc {
                for (u0, legs, d) in &it {
                    let mut f2 = fpolys.clone();
                    for (r, leg) in legs.iter().enumerate() {
                        let mut g = fpoly(leg);
                        if inverse {
                            g = h.f.antipode_poly(&g);
                        }
                        f2[j + 1 + r] = poly_mul(&f2[j + 1 + r], &g);
                    }
                    let mut u2 = u0s.clone();
                    u2.push(u0.clone());
                    next.push((f2, u2, c * d));
                }
            }
            acc = next;
        }
        let _ = v;
        let mut out = BTreeMap::new();
        for (fpolys, u0s, c) in acc {
            for (fk, d) in expand(&fpolys) {
                add_to(&mut out, (fk, u0s.clone()), &c * d);
            }
        }
        out
    }

    /// Ψ: V ⊗ F^{⊗n} ⊗ U^{⊗n} → V ⊗ H^{⊗n}; slot k receives f^k times the
    /// legs of the earlier u^j, and u^k<0>.
    pub fn psi(&self, x: &TotChain) -> Result<HChain, ComplexError> {
        let mut out = HChain::new();
        for ((v, fs, us), c) in x {
            if fs.len() != us.len() {
                return Err(ComplexError::Precondition("Ψ needs a diagonal element".into()));
            }
            for ((fk, uk), d) in self.psi_like(*v, fs, us, false) {
                let key: Vec<HMono> = fk.into_iter().zip(uk).collect();
                add_to(&mut out, (*v, key), c * d);
            }
        }
        Ok(out)
    }

    pub fn psi_inverse(&self, x: &HChain) -> TotChain {
        let mut out = TotChain::new();
        for ((v, hs), c) in x {
            let fs: Vec<FMono> = hs.iter().map(|m| m.0.clone()).collect();
            let us: Vec<Mono> = hs.iter().map(|m| m.1.clone()).collect();
            for ((fk, uk), d) in self.psi_like(*v, &fs, &us, true) {
                add_to(&mut out, (*v, fk, uk), c * d);
            }
        }
        out
    }

    /// α̃(v ⊗ X^1∧…∧X^p ⊗ f̃) = (1/p!) Σ_σ (−1)^σ v ⊗ f̃ ⊗ X^{σ(1)} ⊗ … ⊗ X^{σ(p)}
    pub fn antisymmetrize(&self, v: usize, xs: &[usize], fs: &[FMono], integer: bool) -> TotChain {
        let h = self.h();
        let mut out = TotChain::new();
        for (word, c) in super::lie::antisymmetrize_word(xs, integer) {
            let us: Vec<Mono> = word.iter().map(|&i| h.u.mono(&[(i, 1)])).collect();
            add_to(&mut out, (v, fs.to_vec(), us), c);
        }
        out
    }

    /// Lie algebra homology boundary on V ⊗ ∧^p g ⊗ F^{⊗q} for the right action
    /// (v ⊗ f̃) ◁ X = v ◁_δ X ⊗ f̃ − v ⊗ X ▷ f̃; the result is antisymmetrized.
    pub fn lie_boundary_antisym(&self, v: usize, xs: &[usize], fs: &[FMono]) -> TotChain {
        let h = self.h();
        let mut out = TotChain::new();
        let act = |v: usize, x: usize, fs: &[FMono]| -> Vec<(usize, Vec<FMono>, Q)> {
            let mut r = Vec::new();
            let hm = h.hmono(&[], &[(x, 1)]);
            for (w, a) in self.m.act_mono(&Self::unit_vec(v), &hm, true) {
                r.push((w, fs.to_vec(), a));
            }
            for (fk, a) in self.u_act_ftensor(&h.u.gen(x), fs) {
                r.push((v, fk, -a));
            }
            r
        };
        let p = xs.len();
        for i in 0..p {
            let mut rest = xs.to_vec();
            rest.remove(i);
            for (w, fk, a) in act(v, xs[i], fs) {
                let t = self.antisymmetrize(w, &rest, &fk, false);
                axpy(&mut out, &(sign(i) * a), &t);
            }
        }
        for i in 0..p {
            for j in i + 1..p {
                let mut rest = xs.to_vec();
                rest.remove(j);
                rest.remove(i);
                for (k, e) in h.lie().bracket_basis(xs[i], xs[j]) {
                    let mut w = vec![*k];
                    w.extend(rest.iter().cloned());
                    if w.iter().collect::<std::collections::BTreeSet<_>>().len() < w.len() {
                        continue;
                    }
                    let t = self.antisymmetrize(v, &w, fs, false);
                    axpy(&mut out, &(sign(i + j) * e), &t);
                }
            }
        }
        out
    }

    // ---- display and construction

    pub fn label(&self, k: &TotKey) -> String {
        let h = self.h();
        let mut parts = vec![self.m.basis[k.0].clone()];
        parts.extend(k.1.iter().map(|f| h.format_hmono(&(f.clone(), h.uzero()))));
        parts.extend(k.2.iter().map(|u| h.format_hmono(&(h.fzero(), u.clone()))));
        parts.join(" ⊗ ")
    }

    pub fn format(&self, x: &TotChain) -> String {
        crate::lie::format_combination(x.iter().map(|(k, c)| (self.label(k), c.clone())))
    }

    /// c·(v ⊗ f-factors ⊗ u-factors), each factor parsed as an element of H
    /// lying in F or in U respectively.
    pub fn term(&self, coef: Q, v: &str, fs: &[&str], us: &[&str]) -> Result<TotChain, ComplexError> {
        let h = self.h();
        let vi = self
            .m
            .basis
            .iter()
            .position(|b| b == v)
            .ok_or_else(|| ComplexError::OutOfBasis(format!("unknown vector {v}")))?;
        let mut factors_f: Vec<BTreeMap<FMono, Q>> = Vec::new();
        for s in fs {
            let e: HopfElement = h.parse(s)?;
            factors_f.push(e.into_iter().map(|((f, _), c)| (f, c)).collect());
        }
        let mut factors_u: Vec<BTreeMap<Mono, Q>> = Vec::new();
        for s in us {
            let e: HopfElement = h.parse(s)?;
            factors_u.push(e.into_iter().map(|((_, u), c)| (u, c)).collect());
        }
        let mut out = TotChain::new();
        for (fk, a) in expand(&factors_f) {
            for (uk, b) in expand(&factors_u) {
                add_to(&mut out, (vi, fk.clone(), uk), &coef * &a * b);
            }
        }
        Ok(out)
    }
}

pub fn sum(parts: &[TotChain]) -> TotChain {
    let mut out = TotChain::new();
    for p in parts {
        axpy(&mut out, &Q::one(), p);
    }
    out
}

pub fn diff(a: &TotChain, b: &TotChain) -> TotChain {
    sub_maps(a, b)
}

pub fn neg(a: &TotChain) -> TotChain {
    scaled(&qi(-1), a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::hopf::h1s_cop;
    use crate::sayd::schwarzian_4dim;
    use std::sync::Arc;

    fn setup() -> crate::sayd::InducedSayd {
        schwarzian_4dim(Arc::new(h1s_cop(6))).unwrap()
    }

    #[test]
    fn odd_total_goldens() {
        let s = setup();
        let t = Bicomplex::new(&s.module);
        let c1 = t.term(Q::one(), "1", &["d1"], &[]).unwrap();
        let c3 = sum(&[t.term(Q::one(), "RY", &[], &["X"]).unwrap(), t.term(qi(2), "RZ", &[], &["Y"]).unwrap()]);
        assert!(t.hochschild(Direction::F, &c1).is_empty());
        let expect = sum(&[
            t.term(-Q::one(), "RX", &["d1"], &["X"]).unwrap(),
            t.term(-Q::one(), "RY", &["d1"], &["Y"]).unwrap(),
        ]);
        assert_eq!(t.hochschild(Direction::U, &c1), expect, "{}", t.format(&t.hochschild(Direction::U, &c1)));
        assert_eq!(t.hochschild(Direction::F, &c3), expect, "{}", t.format(&t.hochschild(Direction::F, &c3)));
        assert!(t.hochschild(Direction::U, &c3).is_empty());
        let total = sum(&[c1.clone(), c3.clone()]);
        assert!(t.b_total(&total).is_empty());
        let rz = t.term(Q::one(), "RZ", &[], &[]).unwrap();
        assert_eq!(t.connes(Direction::F, &c1), rz);
        assert_eq!(t.connes(Direction::U, &c3), neg(&rz));
        assert!(t.connes_total(&total).is_empty());
        let aw = t.alexander_whitney(&c1);
        let expect_aw = sum(&[
            t.term(-Q::one(), "1", &["d1"], &["1"]).unwrap(),
            t.term(-Q::one(), "RX", &["d1"], &["X"]).unwrap(),
            t.term(-Q::one(), "RY", &["d1"], &["Y"]).unwrap(),
        ]);
        assert_eq!(aw, expect_aw, "{}", t.format(&aw));
        let aw3 = t.alexander_whitney(&c3);
        let expect3 = sum(&[
            t.term(-Q::one(), "RY", &["1"], &["X"]).unwrap(),
            t.term(qi(-2), "RZ", &["1"], &["Y"]).unwrap(),
        ]);
        assert_eq!(aw3, expect3, "{}", t.format(&aw3));
        let diag = sum(&[aw, aw3]);
        let c = crate::complexes::cyclic::HopfCyclic::new(&s.module);
        let odd = t.psi(&diag).unwrap();
        let expect_odd = {
            let mut e = HChain::new();
            for (k, v, f) in [(-1, "1", "d1"), (-1, "RX", "d1*X"), (-1, "RY", "X + d1*Y"), (-2, "RZ", "Y")] {
                axpy(&mut e, &Q::one(), &c.term(qi(k), v, &[f]));
            }
            e
        };
        assert_eq!(odd, expect_odd, "{}", c.format(&odd));
        assert_eq!(t.psi_inverse(&odd), diag);
        let _ = q(1, 2);
    }

    #[test]
    fn even_total_goldens() {
        let s = setup();
        let t = Bicomplex::new(&s.module);
        let one = Q::one;
        let c = sum(&[
            t.term(one(), "1", &[], &["X", "Y"]).unwrap(),
            t.term(-one(), "1", &[], &["Y", "X"]).unwrap(),
            t.term(-one(), "RX", &[], &["X*Y", "X"]).unwrap(),
            t.term(-one(), "RX", &[], &["Y", "X^2"]).unwrap(),
            t.term(one(), "RY", &[], &["X*Y", "Y"]).unwrap(),
            t.term(one(), "RY", &[], &["X", "Y^2"]).unwrap(),
            t.term(-one(), "RY", &[], &["Y", "X"]).unwrap(),
        ]);
        let c2 = sum(&[
            t.term(-one(), "RX", &["d1"], &["X*Y^2"]).unwrap(),
            t.term(q(2, 3), "RX", &["d1^2"], &["Y^3"]).unwrap(),
            t.term(q(1, 3), "RY", &["d1"], &["Y^3"]).unwrap(),
            t.term(q(-1, 4), "RX", &["d1^2"], &["Y^2"]).unwrap(),
            t.term(q(-1, 2), "RY", &["d1"], &["Y^2"]).unwrap(),
        ]);
        assert!(t.hochschild(Direction::U, &c).is_empty());
        assert!(t.hochschild(Direction::F, &c2).is_empty());
        let fb = t.hochschild(Direction::F, &c);
        assert!(!fb.is_empty());
        assert_eq!(fb, neg(&t.hochschild(Direction::U, &c2)));
        let total = sum(&[c.clone(), c2.clone()]);
        assert!(t.b_total(&total).is_empty(), "{}", t.format(&t.b_total(&total)));
        assert!(t.connes_total(&total).is_empty());
        let aw = t.alexander_whitney(&total);
        let mut manual = t.f_coface(0, &t.f_coface(0, &c));
        axpy(&mut manual, &Q::one(), &t.f_coface(0, &t.u_coface(2, &c2)));
        assert_eq!(aw, manual);
        let hc = crate::complexes::cyclic::HopfCyclic::new(&s.module);
        let even = crate::complexes::goldens::c_even(&hc);
        let image = t.psi(&aw).unwrap();
        assert_eq!(image, even, "{}", hc.format(&image));
        assert_eq!(t.psi_inverse(&image), aw);
    }

    #[test]
    fn psi_round_trip() {
        let s = setup();
        let t = Bicomplex::new(&s.module);
        let hc = crate::complexes::cyclic::HopfCyclic::new(&s.module);
        let odd = crate::complexes::goldens::c_odd(&hc);
        let even = crate::complexes::goldens::c_even(&hc);
        for x in [odd, even] {
            assert_eq!(t.psi(&t.psi_inverse(&x)).unwrap(), x);
        }
        let x = hc.term(Q::one(), "RY", &["d1*X^2", "d1^2*Y", "X*Y"]);
        assert_eq!(t.psi(&t.psi_inverse(&x)).unwrap(), x);
    }

    #[test]
    fn antisymmetrization_intertwines() {
        use crate::sayd::Twist;
        let h = Arc::new(h1s_cop(6));
        let m = HModule::character(h.clone(), Twist::Right);
        let t = Bicomplex::new(&m);
        let fss: Vec<Vec<FMono>> = vec![vec![], vec![vec![1]], vec![vec![2]], vec![vec![1], vec![1]]];
        let mut nonzero = 0;
        for xs in [vec![0], vec![1], vec![0, 1]] {
            for fs in &fss {
                let a = t.antisymmetrize(0, &xs, fs, false);
                assert!(t.hochschild(Direction::U, &a).is_empty(), "{xs:?} {fs:?}");
                let lhs = t.connes(Direction::U, &a);
                let rhs = t.lie_boundary_antisym(0, &xs, fs);
                nonzero += usize::from(!rhs.is_empty());
                assert_eq!(lhs, rhs, "{xs:?} {fs:?}\n{}\n{}", t.format(&lhs), t.format(&rhs));
            }
        }
        assert!(nonzero >= 4, "{nonzero}");
    }
}
