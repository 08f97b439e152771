//! Commutative polynomial Hopf algebras with a Lie algebra action and coaction,
//! and the bicrossed products F ⋈ U(g) built from them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{add_to, axpy, q, qi, sub_maps, Q};
use crate::lie::{format_combination, LieAlgebra};
use crate::par::Memo;
use crate::pbw::{Mono, PbwElement, PbwError, Uea};
use crate::text::{parse_combination, TextError};

pub type FMono = Vec<u32>;
pub type FPoly = BTreeMap<FMono, Q>;
pub type FTensor = BTreeMap<Vec<FMono>, Q>;
/// U(g) ⊗ F, e.g. the values of the coaction ∇: U → U ⊗ F.
pub type UF = BTreeMap<(Mono, FMono), Q>;
pub type HMono = (FMono, Mono);
/// f ⋈ u in normal form, F-part on the left.
pub type HopfElement = BTreeMap<HMono, Q>;
pub type HTensor = BTreeMap<Vec<HMono>, Q>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("Hopf degree cap exceeded: a tensor factor has degree {needed}, cap is {cap}")]
    DegreeCap { needed: usize, cap: usize },
    #[error("{0}")]
    Pbw(#[from] PbwError),
    #[error("{0}")]
    Text(#[from] TextError),
    #[error("unknown built-in Hopf algebra `{0}`")]
    Unknown(String),
    #[error("{0}")]
    LieHopf(#[from] LieHopfViolation),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{identity} fails at {at}: residual {residual}")]
pub struct LieHopfViolation {
    pub identity: String,
    pub at: String,
    pub residual: String,
}

pub fn fdeg(m: &FMono) -> usize {
    m.iter().map(|&e| e as usize).sum()
}

pub fn hdeg(m: &HMono) -> usize {
    fdeg(&m.0) + crate::pbw::mono_degree(&m.1)
}

pub fn poly_mul(a: &FPoly, b: &FPoly) -> FPoly {
    let mut out = FPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: FMono = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            add_to(&mut out, m, ca * cb);
        }
    }
    out
}

/// Commutative polynomial Hopf algebra F on named generators together with a
/// g-action on F and an F-coaction on g.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyHopfData {
    pub generators: Vec<String>,
    /// Δ(f_a) as a sum of (left, right) monomial pairs.
    pub coproduct: Vec<BTreeMap<(FMono, FMono), Q>>,
    pub antipode: Vec<FPoly>,
    pub counit: Vec<Q>,
    /// action[j][a] = X_j ▷ f_a
    pub action: Vec<Vec<FPoly>>,
    /// coaction[i][j] = f^i_j with ∇(X_j) = Σ_i X_i ⊗ f^i_j
    pub coaction: Vec<Vec<FPoly>>,
}

impl PolyHopfData {
    pub fn m(&self) -> usize {
        self.generators.len()
    }

    pub fn one(&self) -> FPoly {
        let mut p = FPoly::new();
        p.insert(vec![0; self.m()], Q::one());
        p
    }

    pub fn gen(&self, a: usize) -> FPoly {
        let mut m = vec![0; self.m()];
        m[a] = 1;
        let mut p = FPoly::new();
        p.insert(m, Q::one());
        p
    }

    /// Primitive generators with antipode -f and counit 0.
    pub fn primitive(generators: Vec<String>, lie_dim: usize) -> Self {
        let m = generators.len();
        let zero = vec![0u32; m];
        let mut coproduct = Vec::new();
        let mut antipode = Vec::new();
        for a in 0..m {
            let mut g = zero.clone();
            g[a] = 1;
            let mut d = BTreeMap::new();
            d.insert((g.clone(), zero.clone()), Q::one());
            d.insert((zero.clone(), g.clone()), Q::one());
            coproduct.push(d);
            let mut s = FPoly::new();
            s.insert(g, -Q::one());
            antipode.push(s);
        }
        let mut coaction = vec![vec![FPoly::new(); lie_dim]; lie_dim];
        for (i, row) in coaction.iter_mut().enumerate() {
            let mut one = FPoly::new();
            one.insert(zero.clone(), Q::one());
            row[i] = one;
        }
        Self {
            generators,
            coproduct,
            antipode,
            counit: vec![Q::zero(); m],
            action: vec![vec![FPoly::new(); m]; lie_dim],
            coaction,
        }
    }

    pub fn counit_poly(&self, f: &FPoly) -> Q {
        let mut total = Q::zero();
        for (m, c) in f {
            let mut v = c.clone();
            for (a, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    v *= &self.counit[a];
                }
            }
            total += v;
        }
        total
    }

    pub fn antipode_poly(&self, f: &FPoly) -> FPoly {
        let mut out = FPoly::new();
        for (m, c) in f {
            let mut acc = FPoly::new();
            acc.insert(vec![0; self.m()], c.clone());
            for (a, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    acc = poly_mul(&acc, &self.antipode[a]);
                }
            }
            axpy(&mut out, &Q::one(), &acc);
        }
        out
    }

    /// X_j ▷ f, extended to polynomials as a derivation.
    pub fn act_gen(&self, j: usize, f: &FPoly) -> FPoly {
        let mut out = FPoly::new();
        for (m, c) in f {
            for (a, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let mut rest = m.clone();
                rest[a] -= 1;
                let mut r = FPoly::new();
                r.insert(rest, c * qi(e as i64));
                axpy(&mut out, &Q::one(), &poly_mul(&r, &self.action[j][a]));
            }
        }
        out
    }

    pub fn coproduct_poly(&self, f: &FPoly) -> FTensor {
        let mut out = FTensor::new();
        for (m, c) in f {
            let mut acc = FTensor::new();
            acc.insert(vec![vec![0; self.m()]; 2], c.clone());
            for (a, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    let mut next = FTensor::new();
                    for (k, x) in &acc {
                        for ((l, r), y) in &self.coproduct[a] {
                            let k2 = vec![add_mono(&k[0], l), add_mono(&k[1], r)];
                            add_to(&mut next, k2, x * y);
                        }
                    }
                    acc = next;
                }
            }
            for (k, x) in acc {
                add_to(&mut out, k, x);
            }
        }
        out
    }
}

pub fn add_mono(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn ftensor_mul(a: &FTensor, b: &FTensor) -> FTensor {
    let mut out = FTensor::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let k: Vec<FMono> = ka.iter().zip(kb).map(|(x, y)| add_mono(x, y)).collect();
            add_to(&mut out, k, ca * cb);
        }
    }
    out
}

fn ftensor_from(f1: &FPoly, f2: &FPoly) -> FTensor {
    let mut out = FTensor::new();
    for (a, x) in f1 {
        for (b, y) in f2 {
            add_to(&mut out, vec![a.clone(), b.clone()], x * y);
        }
    }
    out
}

/// Bicrossed product F ⋈ U(g) attached to a g-Hopf algebra F.
#[derive(Debug)]
pub struct Bicrossed {
    pub name: String,
    pub f: PolyHopfData,
    pub u: Uea,
    pub max_degree: usize,
    u_coaction: Memo<Mono, UF>,
    f_coproduct: Memo<FMono, FTensor>,
    h_coproduct: Memo<HMono, HTensor>,
    action: Memo<(Mono, FMono), FPoly>,
}

impl Clone for Bicrossed {
    fn clone(&self) -> Self {
        Bicrossed::new_unchecked(&self.name, self.f.clone(), self.u.lie.clone(), self.max_degree)
    }
}

impl Bicrossed {
    /// Validates the g-Hopf data before building the handle.
    pub fn new(name: &str, f: PolyHopfData, g: LieAlgebra, max_degree: usize) -> Result<Self, HopfError> {
        validate_lie_hopf(&f, &g)?;
        Ok(Self::new_unchecked(name, f, g, max_degree))
    }

    pub fn new_unchecked(name: &str, f: PolyHopfData, g: LieAlgebra, max_degree: usize) -> Self {
        Self {
            name: name.into(),
            f,
            u: Uea::new(g, usize::MAX),
            max_degree,
            u_coaction: Memo::default(),
            f_coproduct: Memo::default(),
            h_coproduct: Memo::default(),
            action: Memo::default(),
        }
    }

    pub fn with_max_degree(&self, max_degree: usize) -> Self {
        Bicrossed::new_unchecked(&self.name, self.f.clone(), self.u.lie.clone(), max_degree)
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.u.lie
    }

    pub fn fzero(&self) -> FMono {
        vec![0; self.f.m()]
    }

    pub fn uzero(&self) -> Mono {
        vec![0; self.u.n()]
    }

    pub fn unit_mono(&self) -> HMono {
        (self.fzero(), self.uzero())
    }

    pub fn one(&self) -> HopfElement {
        let mut h = HopfElement::new();
        h.insert(self.unit_mono(), Q::one());
        h
    }

    pub fn from_f(&self, f: &FPoly) -> HopfElement {
        f.iter().map(|(m, c)| ((m.clone(), self.uzero()), c.clone())).collect()
    }

    pub fn from_u(&self, u: &PbwElement) -> HopfElement {
        u.iter().map(|(m, c)| ((self.fzero(), m.clone()), c.clone())).collect()
    }

    pub fn f_gen(&self, a: usize) -> HopfElement {
        self.from_f(&self.f.gen(a))
    }

    pub fn u_gen(&self, i: usize) -> HopfElement {
        self.from_u(&self.u.gen(i))
    }

    pub fn mono_elem(&self, m: &HMono) -> HopfElement {
        let mut h = HopfElement::new();
        h.insert(m.clone(), Q::one());
        h
    }

    pub fn check_degree(&self, h: &HopfElement) -> Result<(), HopfError> {
        for m in h.keys() {
            let d = hdeg(m);
            if d > self.max_degree {
                return Err(HopfError::DegreeCap { needed: d, cap: self.max_degree });
            }
        }
        Ok(())
    }

    pub fn check_tensor_degree(&self, t: &HTensor) -> Result<(), HopfError> {
        for k in t.keys() {
            for m in k {
                let d = hdeg(m);
                if d > self.max_degree {
                    return Err(HopfError::DegreeCap { needed: d, cap: self.max_degree });
                }
            }
        }
        Ok(())
    }

    // ---- F-side

    pub fn f_coproduct_mono(&self, m: &FMono) -> Arc<FTensor> {
        self.f_coproduct.get_or(m, || {
            let mut p = FPoly::new();
            p.insert(m.clone(), Q::one());
            self.f.coproduct_poly(&p)
        })
    }

    pub fn f_coproduct(&self, f: &FPoly) -> FTensor {
        let mut out = FTensor::new();
        for (m, c) in f {
            axpy(&mut out, c, &self.f_coproduct_mono(m));
        }
        out
    }

    /// Iterated coproduct of F into k tensor factors.
    pub fn f_coproduct_n(&self, f: &FPoly, k: usize) -> FTensor {
        let mut out: FTensor = f.iter().map(|(m, c)| (vec![m.clone()], c.clone())).collect();
        for _ in 1..k {
            let mut next = FTensor::new();
            for (key, c) in &out {
                for (pair, d) in self.f_coproduct_mono(&key[0]).iter() {
                    let mut k2 = pair.clone();
                    k2.extend(key[1..].iter().cloned());
                    add_to(&mut next, k2, c * d);
                }
            }
            out = next;
        }
        out
    }

    /// u ▷ f for a PBW monomial u.
    pub fn act_mono(&self, u: &Mono, f: &FMono) -> Arc<FPoly> {
        self.action.get_or(&(u.clone(), f.clone()), || {
            let mut p = FPoly::new();
            p.insert(f.clone(), Q::one());
            let mut w = Uea::mono_word(u);
            w.reverse();
            for g in w {
                p = self.f.act_gen(g, &p);
                if p.is_empty() {
                    break;
                }
            }
            p
        })
    }

    pub fn act(&self, u: &PbwElement, f: &FPoly) -> FPoly {
        let mut out = FPoly::new();
        for (um, uc) in u {
            for (fm, fc) in f {
                axpy(&mut out, &(uc * fc), &self.act_mono(um, fm));
            }
        }
        out
    }

    // ---- U-side coaction

    /// ∇(u) ∈ U ⊗ F on a PBW monomial, extended by the product rule
    /// ∇(uv) = u(1)<0> v<0> ⊗ u(1)<1> (u(2) ▷ v<1>).
    pub fn coaction_mono(&self, m: &Mono) -> Arc<UF> {
        self.u_coaction.get_or(m, || {
            let Some(j) = m.iter().rposition(|&e| e > 0) else {
                let mut out = UF::new();
                out.insert((m.clone(), self.fzero()), Q::one());
                return out;
            };
            let mut head = m.clone();
            head[j] -= 1;
            let mut out = UF::new();
            for (pair, c) in self.u.coproduct_mono_n(&head, 2) {
                let (a, b) = (&pair[0], &pair[1]);
                let na = self.coaction_mono(a);
                for ((a0, a1), d) in na.iter() {
                    for i in 0..self.u.n() {
                        let fij = &self.f.coaction[i][j];
                        if fij.is_empty() {
                            continue;
                        }
                        let mut a0e = PbwElement::new();
                        a0e.insert(a0.clone(), Q::one());
                        let left = self.u.mul_gen_right(&a0e, i);
                        let mut a1p = FPoly::new();
                        a1p.insert(a1.clone(), Q::one());
                        let mut bp = PbwElement::new();
                        bp.insert(b.clone(), Q::one());
                        let right = poly_mul(&a1p, &self.act(&bp, fij));
                        for (lm, lc) in &left {
                            for (rm, rc) in &right {
                                add_to(&mut out, (lm.clone(), rm.clone()), &c * d * lc * rc);
                            }
                        }
                    }
                }
            }
            out
        })
    }

    pub fn extend_coaction(&self, u: &PbwElement) -> UF {
        let mut out = UF::new();
        for (m, c) in u {
            axpy(&mut out, c, &self.coaction_mono(m));
        }
        out
    }

    /// Right-hand side of the product rule for arbitrary u, v (used to witness
    /// well-definedness against `extend_coaction(uv)`).
    pub fn coaction_product_rule(&self, u: &PbwElement, v: &PbwElement) -> UF {
        let mut out = UF::new();
        let nv = self.extend_coaction(v);
        for (pair, c) in self.u.coproduct_n(u, 2) {
            let mut u1 = PbwElement::new();
            u1.insert(pair[0].clone(), Q::one());
            let mut u2 = PbwElement::new();
            u2.insert(pair[1].clone(), Q::one());
            for ((a0, a1), d) in self.extend_coaction(&u1) {
                for ((v0, v1), e) in &nv {
                    let mut a0e = PbwElement::new();
                    a0e.insert(a0.clone(), Q::one());
                    let mut v0e = PbwElement::new();
                    v0e.insert(v0.clone(), Q::one());
                    let left = self.u.multiply(&a0e, &v0e).expect("uncapped");
                    let mut a1p = FPoly::new();
                    a1p.insert(a1.clone(), Q::one());
                    let mut v1p = FPoly::new();
                    v1p.insert(v1.clone(), Q::one());
                    let right = poly_mul(&a1p, &self.act(&u2, &v1p));
                    for (lm, lc) in &left {
                        for (rm, rc) in &right {
                            add_to(&mut out, (lm.clone(), rm.clone()), &c * &d * e * lc * rc);
                        }
                    }
                }
            }
        }
        out
    }

    // ---- H

    pub fn mul(&self, a: &HopfElement, b: &HopfElement) -> HopfElement {
        let mut out = HopfElement::new();
        for ((f, u), ca) in a {
            let ud = self.u.coproduct_mono_n(u, 2);
            for ((g, v), cb) in b {
                let mut ve = PbwElement::new();
                ve.insert(v.clone(), Q::one());
                for (pair, c) in &ud {
                    let acted = self.act_mono(&pair[0], g);
                    if acted.is_empty() {
                        continue;
                    }
                    let mut fp = FPoly::new();
                    fp.insert(f.clone(), Q::one());
                    let fpart = poly_mul(&fp, &acted);
                    let mut u2 = PbwElement::new();
                    u2.insert(pair[1].clone(), Q::one());
                    let upart = self.u.multiply(&u2, &ve).expect("uncapped");
                    let coef = ca * cb * c;
                    for (fm, fc) in &fpart {
                        for (um, uc) in &upart {
                            add_to(&mut out, (fm.clone(), um.clone()), &coef * fc * uc);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn mul_checked(&self, a: &HopfElement, b: &HopfElement) -> Result<HopfElement, HopfError> {
        let r = self.mul(a, b);
        self.check_degree(&r)?;
        Ok(r)
    }

    pub fn counit(&self, h: &HopfElement) -> Q {
        h.iter()
            .map(|((f, u), c)| {
                let mut fp = FPoly::new();
                fp.insert(f.clone(), Q::one());
                let mut ue = PbwElement::new();
                ue.insert(u.clone(), Q::one());
                c * self.f.counit_poly(&fp) * self.u.counit(&ue)
            })
            .sum()
    }

    /// Δ(f ⋈ u) = f(1) ⋈ u(1)<0> ⊗ f(2) u(1)<1> ⋈ u(2)
    pub fn coproduct_mono(&self, m: &HMono) -> Arc<HTensor> {
        self.h_coproduct.get_or(m, || {
            let (f, u) = m;
            let mut out = HTensor::new();
            let fd = self.f_coproduct_mono(f);
            for (upair, uc) in self.u.coproduct_mono_n(u, 2) {
                let nab = self.coaction_mono(&upair[0]);
                for (fk, fc) in fd.iter() {
                    for ((a0, a1), d) in nab.iter() {
                        let left = (fk[0].clone(), a0.clone());
                        let right = (add_mono(&fk[1], a1), upair[1].clone());
                        add_to(&mut out, vec![left, right], &uc * fc * d);
                    }
                }
            }
            out
        })
    }

    pub fn coproduct(&self, h: &HopfElement) -> HTensor {
        let mut out = HTensor::new();
        for (m, c) in h {
            axpy(&mut out, c, &self.coproduct_mono(m));
        }
        out
    }

    /// Δ^{(k)}: split into k tensor factors by repeatedly applying Δ to the first.
    pub fn coproduct_n(&self, h: &HopfElement, k: usize) -> HTensor {
        let mut out: HTensor = h.iter().map(|(m, c)| (vec![m.clone()], c.clone())).collect();
        for _ in 1..k {
            let mut next = HTensor::new();
            for (key, c) in &out {
                for (pair, d) in self.coproduct_mono(&key[0]).iter() {
                    let mut k2 = pair.clone();
                    k2.extend(key[1..].iter().cloned());
                    add_to(&mut next, k2, c * d);
                }
            }
            out = next;
        }
        out
    }

    /// S(f ⋈ u) = (1 ⋈ S(u<0>)) (S(f u<1>) ⋈ 1)
    pub fn antipode(&self, h: &HopfElement) -> HopfElement {
        let mut out = HopfElement::new();
        for ((f, u), c) in h {
            let mut fp = FPoly::new();
            fp.insert(f.clone(), Q::one());
            for ((u0, u1), d) in self.coaction_mono(u).iter() {
                let mut u0e = PbwElement::new();
                u0e.insert(u0.clone(), Q::one());
                let left = self.from_u(&self.u.antipode(&u0e));
                let mut u1p = FPoly::new();
                u1p.insert(u1.clone(), Q::one());
                let right = self.from_f(&self.f.antipode_poly(&poly_mul(&fp, &u1p)));
                axpy(&mut out, &(c * d), &self.mul(&left, &right));
            }
        }
        out
    }

    pub fn add(&self, a: &HopfElement, b: &HopfElement) -> HopfElement {
        crate::exact::add_maps(a, b)
    }

    pub fn sub(&self, a: &HopfElement, b: &HopfElement) -> HopfElement {
        sub_maps(a, b)
    }

    /// Multiply two H-tensors of equal length factorwise.
    pub fn tensor_mul(&self, a: &HTensor, b: &HTensor) -> HTensor {
        let mut out = HTensor::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let mut partial: HTensor = BTreeMap::new();
                partial.insert(Vec::new(), ca * cb);
                for (x, y) in ka.iter().zip(kb) {
                    let prod = self.mul(&self.mono_elem(x), &self.mono_elem(y));
                    let mut next = HTensor::new();
                    for (key, c) in &partial {
                        for (m, d) in &prod {
                            let mut k2 = key.clone();
                            k2.push(m.clone());
                            add_to(&mut next, k2, c * d);
                        }
                    }
                    partial = next;
                    if partial.is_empty() {
                        break;
                    }
                }
                for (k, c) in partial {
                    add_to(&mut out, k, c);
                }
            }
        }
        out
    }

    /// Left diagonal action h · (h^1 ⊗ ... ⊗ h^k) = h(1)h^1 ⊗ ... ⊗ h(k)h^k.
    pub fn diagonal_mul(&self, h: &HopfElement, t: &HTensor) -> HTensor {
        let Some(k) = t.keys().next().map(|k| k.len()) else {
            return HTensor::new();
        };
        if k == 0 {
            let e = self.counit(h);
            return t.iter().map(|(kk, c)| (kk.clone(), c * &e)).filter(|(_, c)| !c.is_zero()).collect();
        }
        let dh = self.coproduct_n(h, k);
        self.tensor_mul(&dh, t)
    }

    // ---- modular pair

    pub fn sigma(&self) -> FPoly {
        let n = self.u.n();
        let mut total = FPoly::new();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let sign = crate::pbw::perm_sign(&perm);
            let mut prod = self.f.one();
            for (j, &i) in perm.iter().enumerate() {
                prod = poly_mul(&prod, &self.f.coaction[i][j]);
                if prod.is_empty() {
                    break;
                }
            }
            axpy(&mut total, &qi(sign), &prod);
            if !crate::pbw::next_permutation(&mut perm) {
                break;
            }
        }
        total
    }

    pub fn delta(&self, h: &HopfElement) -> Q {
        let ch = self.u.lie.trace_character();
        h.iter()
            .map(|((f, u), c)| {
                let mut fp = FPoly::new();
                fp.insert(f.clone(), Q::one());
                let mut du = Q::one();
                for (i, &e) in u.iter().enumerate() {
                    for _ in 0..e {
                        du *= &ch.values[i];
                    }
                }
                c * self.f.counit_poly(&fp) * du
            })
            .sum()
    }

    /// S_δ(h) = δ(h(1)) S(h(2))
    pub fn twisted_antipode(&self, h: &HopfElement) -> HopfElement {
        let mut out = HopfElement::new();
        for (pair, c) in self.coproduct(h) {
            let d = self.delta(&self.mono_elem(&pair[0]));
            if d.is_zero() {
                continue;
            }
            axpy(&mut out, &(c * d), &self.antipode(&self.mono_elem(&pair[1])));
        }
        out
    }

    pub fn generators(&self) -> Vec<(String, HopfElement)> {
        let mut v: Vec<(String, HopfElement)> =
            (0..self.f.m()).map(|a| (self.f.generators[a].clone(), self.f_gen(a))).collect();
        v.extend((0..self.u.n()).map(|i| (self.u.lie.basis[i].clone(), self.u_gen(i))));
        v
    }

    pub fn canonical_mpi(&self) -> MpiReport {
        let sigma = self.sigma();
        let sig_h = self.from_f(&sigma);
        let sig_inv = self.from_f(&self.f.antipode_poly(&sigma));
        let mut failures = Vec::new();
        for (name, g) in self.generators() {
            let lhs = self.twisted_antipode(&self.twisted_antipode(&g));
            let rhs = self.mul(&self.mul(&sig_h, &g), &sig_inv);
            let r = sub_maps(&lhs, &rhs);
            if !r.is_empty() {
                failures.push(format!("S_delta^2({name}) - sigma {name} sigma^-1 = {}", self.format(&r)));
            }
        }
        let dsig = self.f_coproduct(&sigma);
        if dsig != ftensor_from(&sigma, &sigma) {
            failures.push("sigma is not group-like".into());
        }
        let delta = (0..self.u.n()).map(|i| (self.u.lie.basis[i].clone(), self.delta(&self.u_gen(i)))).collect();
        MpiReport { sigma: self.format(&self.from_f(&sigma)), delta, failures }
    }

    // ---- text

    pub fn format_hmono(&self, m: &HMono) -> String {
        let mut parts: Vec<String> = m
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(a, &e)| if e == 1 { self.f.generators[a].clone() } else { format!("{}^{}", self.f.generators[a], e) })
            .collect();
        let u = self.u.format_mono(&m.1);
        if u != "1" {
            parts.push(u);
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn format(&self, h: &HopfElement) -> String {
        format_combination(h.iter().map(|(m, c)| (self.format_hmono(m), c.clone())))
    }

    pub fn format_tensor(&self, t: &HTensor) -> String {
        format_combination(
            t.iter().map(|(k, c)| (k.iter().map(|m| self.format_hmono(m)).collect::<Vec<_>>().join(" ⊗ "), c.clone())),
        )
    }

    pub fn format_uf(&self, t: &UF) -> String {
        format_combination(t.iter().map(|((u, f), c)| {
            let fs = self.format_hmono(&(f.clone(), self.uzero()));
            (format!("{} ⊗ {}", self.u.format_mono(u), fs), c.clone())
        }))
    }

    /// Parses a product expression; factors may be F-generators or g-basis names
    /// in any order, multiplied in H.
    pub fn parse(&self, s: &str) -> Result<HopfElement, HopfError> {
        let mut out = HopfElement::new();
        for t in parse_combination(s)? {
            let mut acc = self.one();
            for (name, p) in &t.factors {
                let g = if let Some(a) = self.f.generators.iter().position(|x| x == name) {
                    self.f_gen(a)
                } else if let Some(i) = self.u.lie.index_of(name) {
                    self.u_gen(i)
                } else {
                    return Err(TextError::UnknownSymbol(name.clone()).into());
                };
                for _ in 0..*p {
                    acc = self.mul(&acc, &g);
                }
            }
            axpy(&mut out, &t.coeff, &acc);
        }
        Ok(out)
    }

    /// Builds f ⋈ u directly from text for each part (no reordering).
    /// All monomials f ⋈ u of total degree ≤ max, by degree.
    pub fn monomials(&self, max: u32) -> Vec<HMono> {
        let nf = self.fzero().len();
        let nu = self.u.n();
        let mut out = Vec::new();
        for d in 0..=max {
            for c in crate::pbw::compositions(d, nf + nu) {
                out.push((c[..nf].to_vec(), c[nf..].to_vec()));
            }
        }
        out
    }

    pub fn hmono(&self, f: &[(usize, u32)], u: &[(usize, u32)]) -> HMono {
        let mut fm = self.fzero();
        for &(a, e) in f {
            fm[a] += e;
        }
        (fm, self.u.mono(u))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpiReport {
    pub sigma: String,
    pub delta: Vec<(String, Q)>,
    pub failures: Vec<String>,
}

impl MpiReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for MpiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma = {}; ", self.sigma)?;
        for (n, v) in &self.delta {
            write!(f, "delta({n}) = {v}; ")?;
        }
        if self.failures.is_empty() {
            write!(f, "S_delta^2 = Ad_sigma on generators")
        } else {
            write!(f, "failures: {}", self.failures.join("; "))
        }
    }
}

fn fmt_poly(f: &PolyHopfData, p: &FPoly) -> String {
    format_combination(p.iter().map(|(m, c)| {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(a, &e)| if e == 1 { f.generators[a].clone() } else { format!("{}^{}", f.generators[a], e) })
            .collect();
        (if parts.is_empty() { "1".into() } else { parts.join("*") }, c.clone())
    }))
}

fn fmt_ftensor(f: &PolyHopfData, t: &FTensor) -> String {
    format_combination(t.iter().map(|(k, c)| {
        let s: Vec<String> = k
            .iter()
            .map(|m| {
                let mut p = FPoly::new();
                p.insert(m.clone(), Q::one());
                fmt_poly(f, &p)
            })
            .collect();
        (s.join(" ⊗ "), c.clone())
    }))
}

/// Checks that F is a g-Hopf algebra: coalgebra sanity on generators, the
/// comultiplication of the matrix coefficients, the structure identity, that ▷
/// is a Lie action by derivations, and the two equivariance conditions.
pub fn validate_lie_hopf(f: &PolyHopfData, g: &LieAlgebra) -> Result<(), LieHopfViolation> {
    let n = g.dim();
    let m = f.m();
    let fail = |identity: &str, at: String, residual: String| LieHopfViolation { identity: identity.into(), at, residual };
    if f.action.len() != n || f.coaction.len() != n || f.coaction.iter().any(|r| r.len() != n) {
        return Err(fail("shape", "tables".into(), "action/coaction tables do not match dim g".into()));
    }
    let one = f.one();
    // coalgebra axioms on generators
    for a in 0..m {
        let ga = f.gen(a);
        let d = f.coproduct_poly(&ga);
        let mut left = FPoly::new();
        let mut right = FPoly::new();
        for (k, c) in &d {
            let mut p0 = FPoly::new();
            p0.insert(k[0].clone(), Q::one());
            let mut p1 = FPoly::new();
            p1.insert(k[1].clone(), Q::one());
            axpy(&mut left, &(c * f.counit_poly(&p0)), &p1);
            axpy(&mut right, &(c * f.counit_poly(&p1)), &p0);
        }
        if left != ga || right != ga {
            return Err(fail("counit law", f.generators[a].clone(), fmt_poly(f, &sub_maps(&left, &ga))));
        }
        let mut s_law = FPoly::new();
        for (k, c) in &d {
            let mut p0 = FPoly::new();
            p0.insert(k[0].clone(), Q::one());
            let mut p1 = FPoly::new();
            p1.insert(k[1].clone(), Q::one());
            axpy(&mut s_law, c, &poly_mul(&f.antipode_poly(&p0), &p1));
        }
        let expect = crate::exact::scaled(&f.counit[a], &one);
        if s_law != expect {
            return Err(fail("antipode law", f.generators[a].clone(), fmt_poly(f, &sub_maps(&s_law, &expect))));
        }
    }
    // Δ(f^j_i) = Σ_k f^j_k ⊗ f^k_i
    for j in 0..n {
        for i in 0..n {
            let lhs = f.coproduct_poly(&f.coaction[j][i]);
            let mut rhs = FTensor::new();
            for k in 0..n {
                axpy(&mut rhs, &Q::one(), &ftensor_from(&f.coaction[j][k], &f.coaction[k][i]));
            }
            if lhs != rhs {
                return Err(fail(
                    "coaction coassociativity",
                    format!("f^{}_{}", g.basis[j], g.basis[i]),
                    fmt_ftensor(f, &sub_maps(&lhs, &rhs)),
                ));
            }
            let e = f.counit_poly(&f.coaction[j][i]);
            let want = if i == j { Q::one() } else { Q::zero() };
            if e != want {
                return Err(fail("coaction counitality", format!("f^{}_{}", g.basis[j], g.basis[i]), e.to_string()));
            }
        }
    }
    // structure identity: f^k_{j,i} - f^k_{i,j} = Σ C^k_{sr} f^r_i f^s_j + Σ C^l_{ij} f^k_l
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut r = f.act_gen(i, &f.coaction[k][j]);
                axpy(&mut r, &-Q::one(), &f.act_gen(j, &f.coaction[k][i]));
                for s in 0..n {
                    for rr in 0..n {
                        let c = g.constant(s, rr, k);
                        if !c.is_zero() {
                            axpy(&mut r, &-c, &poly_mul(&f.coaction[rr][i], &f.coaction[s][j]));
                        }
                    }
                }
                for l in 0..n {
                    let c = g.constant(i, j, l);
                    if !c.is_zero() {
                        axpy(&mut r, &-c, &f.coaction[k][l]);
                    }
                }
                if !r.is_empty() {
                    return Err(fail(
                        "structure identity",
                        format!("(i,j,k) = ({},{},{})", g.basis[i], g.basis[j], g.basis[k]),
                        fmt_poly(f, &r),
                    ));
                }
            }
        }
    }
    // Lie action
    for i in 0..n {
        for j in 0..n {
            for a in 0..m {
                let ga = f.gen(a);
                let mut r = f.act_gen(i, &f.act_gen(j, &ga));
                axpy(&mut r, &-Q::one(), &f.act_gen(j, &f.act_gen(i, &ga)));
                for (l, c) in g.bracket_basis(i, j) {
                    axpy(&mut r, &-c.clone(), &f.act_gen(*l, &ga));
                }
                if !r.is_empty() {
                    return Err(fail(
                        "Lie action",
                        format!("({}, {}, {})", g.basis[i], g.basis[j], f.generators[a]),
                        fmt_poly(f, &r),
                    ));
                }
            }
        }
    }
    // ε(X ▷ f) = 0 and Δ(X ▷ f) = X • Δ(f)
    for j in 0..n {
        for a in 0..m {
            let ga = f.gen(a);
            let xf = f.act_gen(j, &ga);
            let e = f.counit_poly(&xf);
            if !e.is_zero() {
                return Err(fail("counit equivariance", format!("({}, {})", g.basis[j], f.generators[a]), e.to_string()));
            }
            let lhs = f.coproduct_poly(&xf);
            let mut rhs = FTensor::new();
            for (k, c) in f.coproduct_poly(&ga) {
                let mut p0 = FPoly::new();
                p0.insert(k[0].clone(), Q::one());
                let mut p1 = FPoly::new();
                p1.insert(k[1].clone(), Q::one());
                // X<0> ▷ f1 ⊗ X<1> f2
                for i in 0..n {
                    let fij = &f.coaction[i][j];
                    if fij.is_empty() {
                        continue;
                    }
                    axpy(&mut rhs, &c, &ftensor_from(&f.act_gen(i, &p0), &poly_mul(fij, &p1)));
                }
                // f1 ⊗ X ▷ f2
                axpy(&mut rhs, &c, &ftensor_from(&p0, &f.act_gen(j, &p1)));
            }
            if lhs != rhs {
                return Err(fail(
                    "coproduct equivariance",
                    format!("({}, {})", g.basis[j], f.generators[a]),
                    fmt_ftensor(f, &sub_maps(&lhs, &rhs)),
                ));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Built-ins

/// H_nProj data: F = polynomials in f_1..f_n, g = gl(n)^aff. `half` is the
/// coefficient used in X_l ▷ f_k = half·f_k f_l (1/2 for the genuine algebra).
pub fn hn_proj_data(n: usize, half: Q) -> (PolyHopfData, LieAlgebra) {
    let g = crate::lie::gl_aff(n);
    let gens: Vec<String> = (1..=n).map(|k| format!("f{k}")).collect();
    let mut f = PolyHopfData::primitive(gens, g.dim());
    let gi = |i: usize, j: usize| crate::lie::gl_index(n, n, i, j);
    let fk = |k: usize| {
        let mut m = vec![0u32; n];
        m[k - 1] += 1;
        m
    };
    for l in 1..=n {
        for k in 1..=n {
            let mut p = FPoly::new();
            let mut m = fk(k);
            m[l - 1] += 1;
            p.insert(m, half.clone());
            f.action[l - 1][k - 1] = p;
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                if k == j {
                    let mut p = FPoly::new();
                    p.insert(fk(i), Q::one());
                    f.action[gi(i, j)][k - 1] = p;
                }
            }
        }
    }
    // X_k ↦ X_k ⊗ 1 + ½ X_k^a ⊗ f_a + ½ Σ_a X_a^a ⊗ f_k
    for k in 1..=n {
        for a in 1..=n {
            add_to(&mut f.coaction[gi(k, a)][k - 1], fk(a), q(1, 2));
            add_to(&mut f.coaction[gi(a, a)][k - 1], fk(k), q(1, 2));
        }
    }
    (f, g)
}

pub fn hn_proj(n: usize, max_degree: usize) -> Result<Bicrossed, HopfError> {
    let (f, g) = hn_proj_data(n, q(1, 2));
    Bicrossed::new(&format!("HnProj({n})"), f, g, max_degree)
}

/// F = C[d1] ⋈ U(gl(1)^aff) with U-basis X, Y; identical to H_1Proj.
pub fn h1s_cop(max_degree: usize) -> Bicrossed {
    let g = LieAlgebra::from_brackets("gl(1)-aff", vec!["X".into(), "Y".into()], vec![(1, 0, crate::lie::unit(0))]);
    let mut f = PolyHopfData::primitive(vec!["d1".into()], 2);
    f.action[0][0].insert(vec![2], q(1, 2));
    f.action[1][0].insert(vec![1], Q::one());
    f.coaction[1][0].insert(vec![1], Q::one());
    Bicrossed::new("H1S-cop", f, g, max_degree).expect("built-in data is a g-Hopf algebra")
}

pub fn builtin_hopf(name: &str, n: Option<usize>, max_degree: usize) -> Result<Bicrossed, HopfError> {
    let (base, pn) = crate::lie::split_param(name);
    match base.as_str() {
        "H1S-cop" | "H1S" => Ok(h1s_cop(max_degree)),
        "HnProj" => {
            let n = pn.or(n).ok_or_else(|| HopfError::Unknown(name.into()))?;
            hn_proj(n, max_degree)
        }
        _ => Err(HopfError::Unknown(name.into())),
    }
}

/// Binomial expansion helper used in tests and oracles.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let total: u32 = parts.iter().sum();
    let mut r = crate::exact::factorial(total as usize);
    for &p in parts {
        r /= crate::exact::factorial(p as usize);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h1s_relations() {
        let h = h1s_cop(6);
        let x = h.parse("X").unwrap();
        let y = h.parse("Y").unwrap();
        let d = h.parse("d1").unwrap();
        let comm = |a: &HopfElement, b: &HopfElement| h.sub(&h.mul(a, b), &h.mul(b, a));
        assert_eq!(comm(&y, &x), x);
        assert_eq!(comm(&x, &d), h.parse("1/2*d1^2").unwrap());
        assert_eq!(comm(&y, &d), d);
        assert_eq!(h.mul(&x, &d), h.parse("1/2*d1^2 + d1*X").unwrap());
        let dx = h.coproduct(&x);
        assert_eq!(h.format_tensor(&dx), "1 ⊗ X + Y ⊗ d1 + X ⊗ 1");
        assert_eq!(h.antipode(&x), h.parse("-X + Y*d1").unwrap());
        for (_, g) in h.generators() {
            assert!(h.counit(&g).is_zero());
        }
    }

    #[test]
    fn coaction_of_x_squared() {
        let h = h1s_cop(6);
        let x2 = h.u.parse("X^2").unwrap();
        let got = h.extend_coaction(&x2);
        let mut expect = UF::new();
        expect.insert((vec![2, 0], vec![0]), qi(1));
        expect.insert((vec![1, 1], vec![1]), qi(2));
        expect.insert((vec![1, 0], vec![1]), qi(1));
        expect.insert((vec![0, 2], vec![2]), qi(1));
        expect.insert((vec![0, 1], vec![2]), q(1, 2));
        assert_eq!(got, expect);
    }

    #[test]
    fn hn_proj_validates() {
        for n in [1, 2] {
            hn_proj(n, 6).unwrap();
        }
    }

    #[test]
    fn perturbed_hn_proj_rejected() {
        for n in [1, 2] {
            let (f, g) = hn_proj_data(n, qi(1));
            let err = validate_lie_hopf(&f, &g).unwrap_err();
            eprintln!("n={n}: {err}");
            assert!(Bicrossed::new("bad", f, g, 6).is_err());
        }
    }

    #[test]
    fn mpi() {
        let h = h1s_cop(6);
        let r = h.canonical_mpi();
        assert!(r.ok(), "{r}");
        assert_eq!(r.sigma, "1");
        assert_eq!(r.delta, vec![("X".into(), qi(0)), ("Y".into(), qi(1))]);
    }
}
