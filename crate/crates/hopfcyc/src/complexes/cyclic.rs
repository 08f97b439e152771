//! The cocyclic module C^q(H, V) = V ⊗ H^{⊗q} of a SAYD module over a
//! bicrossed product, with b and B.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::ComplexError;
use crate::exact::{add_to, axpy, qi, scaled, sub_maps, SparseVec, Q};
use crate::hopf::{hdeg, HMono, HTensor, HopfError, HopfElement};
use crate::par::Memo;
use crate::sayd::HModule;

/// v ⊗ h^1 ⊗ … ⊗ h^q keyed by (index of v, monomials).
pub type HChain = BTreeMap<(usize, Vec<HMono>), Q>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{relation} fails on {witness}: residual {residual}")]
pub struct CocyclicViolation {
    pub relation: String,
    pub witness: String,
    pub residual: String,
}

type ShiftKey = (bool, usize, Vec<HMono>);

#[derive(Debug)]
pub struct HopfCyclic<'a> {
    pub m: &'a HModule,
    shifted: Memo<ShiftKey, HChain>,
}

fn tensor_of(t: &[HMono]) -> HTensor {
    let mut out = HTensor::new();
    out.insert(t.to_vec(), Q::one());
    out
}

impl<'a> HopfCyclic<'a> {
    pub fn new(m: &'a HModule) -> Self {
        Self { m, shifted: Memo::default() }
    }

    fn unit_vec(i: usize) -> SparseVec {
        let mut e = SparseVec::new();
        e.insert(i, Q::one());
        e
    }

    pub fn degree(x: &HChain) -> Option<usize> {
        x.keys().next().map(|k| k.1.len())
    }

    /// Largest Hopf degree of a single tensor factor.
    pub fn max_factor_degree(x: &HChain) -> usize {
        x.keys().flat_map(|k| k.1.iter().map(hdeg)).max().unwrap_or(0)
    }

    pub fn check_cap(&self, x: &HChain) -> Result<(), ComplexError> {
        let d = Self::max_factor_degree(x);
        let cap = self.m.hopf.max_degree;
        if d > cap {
            return Err(HopfError::DegreeCap { needed: d, cap }.into());
        }
        Ok(())
    }

    // ---- cosimplicial structure

    pub fn coface(&self, i: usize, x: &HChain) -> HChain {
        let h = &self.m.hopf;
        let mut out = HChain::new();
        for ((v, t), c) in x {
            let q = t.len();
            if i == 0 {
                let mut t2 = vec![h.unit_mono()];
                t2.extend(t.iter().cloned());
                add_to(&mut out, (*v, t2), c.clone());
            } else if i <= q {
                for (pair, d) in h.coproduct_mono(&t[i - 1]).iter() {
                    let mut t2 = t[..i - 1].to_vec();
                    t2.extend(pair.iter().cloned());
                    t2.extend(t[i..].iter().cloned());
                    add_to(&mut out, (*v, t2), c * d);
                }
            } else {
                for ((m, u), d) in &self.m.coaction[*v] {
                    let mut t2 = t.clone();
                    t2.push(m.clone());
                    add_to(&mut out, (*u, t2), c * d);
                }
            }
        }
        out
    }

    pub fn codegeneracy(&self, j: usize, x: &HChain) -> HChain {
        let h = &self.m.hopf;
        let mut out = HChain::new();
        for ((v, t), c) in x {
            let e = h.counit(&h.mono_elem(&t[j]));
            if e.is_zero() {
                continue;
            }
            let mut t2 = t.clone();
            t2.remove(j);
            add_to(&mut out, (*v, t2), c * e);
        }
        out
    }

    /// v ⊗ h^1 ⊗ rest ↦ v ◁ h^1(1) ⊗ S(h^1(2)) · (rest ⊗ tail), summed over
    /// the coaction when `with_coaction` appends v<-1>.
    fn shift(&self, x: &HChain, with_coaction: bool) -> HChain {
        let mut out = HChain::new();
        for ((v, t), c) in x {
            let y = self.shifted.get_or(&(with_coaction, *v, t.clone()), || self.shift_basis(*v, t, with_coaction));
            axpy(&mut out, c, &y);
        }
        out
    }

    fn shift_basis(&self, v: usize, t: &[HMono], with_coaction: bool) -> HChain {
        let h = &self.m.hopf;
        let mut out = HChain::new();
        if t.is_empty() {
            if with_coaction {
                add_to(&mut out, (v, Vec::new()), Q::one());
            }
            return out;
        }
        let terms: Vec<(usize, Option<HMono>, Q)> = if with_coaction {
            self.m.coaction[v].iter().map(|((m, u), d)| (*u, Some(m.clone()), d.clone())).collect()
        } else {
            vec![(v, None, Q::one())]
        };
        let delta = h.coproduct_mono(&t[0]);
        for (u, tail, d) in terms {
            let mut rest = t[1..].to_vec();
            if let Some(m) = tail {
                rest.push(m);
            }
            let rest_t = tensor_of(&rest);
            for (pair, e) in delta.iter() {
                let acted = self.m.act_mono(&Self::unit_vec(u), &pair[0], true);
                if acted.is_empty() {
                    continue;
                }
                let s = h.antipode(&h.mono_elem(&pair[1]));
                let moved = h.diagonal_mul(&s, &rest_t);
                for (w, f) in &acted {
                    for (k, g) in &moved {
                        add_to(&mut out, (*w, k.clone()), &d * e * f * g);
                    }
                }
            }
        }
        out
    }

    /// τ(v⊗h^1⊗…⊗h^q) = v<0> ◁ h^1(1) ⊗ S(h^1(2)) · (h^2⊗…⊗h^q⊗v<-1>)
    pub fn tau(&self, x: &HChain) -> HChain {
        self.shift(x, true)
    }

    pub fn tau_pow(&self, x: &HChain, k: usize) -> HChain {
        let mut y = x.clone();
        for _ in 0..k {
            y = self.tau(&y);
        }
        y
    }

    /// σ_{-1}(v⊗h^1⊗…⊗h^{n+1}) = v ◁ h^1(1) ⊗ S(h^1(2)) · (h^2⊗…⊗h^{n+1})
    pub fn extra_degeneracy(&self, x: &HChain) -> HChain {
        self.shift(x, false)
    }

    pub fn b(&self, x: &HChain) -> HChain {
        let Some(q) = Self::degree(x) else { return HChain::new() };
        let mut out = HChain::new();
        for i in 0..=q + 1 {
            let s = if i % 2 == 0 { Q::one() } else { -Q::one() };
            axpy(&mut out, &s, &self.coface(i, x));
        }
        out
    }

    /// B = Σ_{i=0}^{n} (−1)^{ni} τ^i σ_{-1} on C^{n+1}
    pub fn connes_b(&self, x: &HChain) -> HChain {
        let Some(q) = Self::degree(x) else { return HChain::new() };
        if q == 0 {
            return HChain::new();
        }
        let n = q - 1;
        let mut y = self.extra_degeneracy(x);
        let mut out = HChain::new();
        for i in 0..=n {
            let s = if (n * i) % 2 == 0 { Q::one() } else { -Q::one() };
            axpy(&mut out, &s, &y);
            y = self.tau(&y);
        }
        out
    }

    /// B = (Σ_{i=0}^{q−1} (−1)^{(q−1)i} τ^i) σ_{q−1} τ
    pub fn connes_b_general(&self, x: &HChain) -> HChain {
        let Some(q) = Self::degree(x) else { return HChain::new() };
        if q == 0 {
            return HChain::new();
        }
        let mut y = self.codegeneracy(q - 1, &self.tau(x));
        let mut out = HChain::new();
        for i in 0..q {
            let s = if ((q - 1) * i) % 2 == 0 { Q::one() } else { -Q::one() };
            axpy(&mut out, &s, &y);
            y = self.tau(&y);
        }
        out
    }

    pub fn b_checked(&self, x: &HChain) -> Result<HChain, ComplexError> {
        let y = self.b(x);
        self.check_cap(&y)?;
        Ok(y)
    }

    pub fn connes_b_checked(&self, x: &HChain) -> Result<HChain, ComplexError> {
        self.check_cap(x)?;
        let y = self.connes_b(x);
        self.check_cap(&y)?;
        Ok(y)
    }

    // ---- construction and display

    pub fn elem(&self, v: usize, factors: &[HopfElement]) -> HChain {
        let mut out = HChain::new();
        out.insert((v, Vec::new()), Q::one());
        for f in factors {
            let mut next = HChain::new();
            for ((w, t), c) in &out {
                for (m, d) in f {
                    let mut t2 = t.clone();
                    t2.push(m.clone());
                    add_to(&mut next, (*w, t2), c * d);
                }
            }
            out = next;
        }
        out
    }

    /// Parse "v ⊗ h1 ⊗ h2" terms; factors use the Hopf parser.
    pub fn term(&self, coef: Q, v: &str, factors: &[&str]) -> HChain {
        let vi = self.m.basis.iter().position(|b| b == v).unwrap_or_else(|| panic!("unknown vector {v}"));
        let hs: Vec<HopfElement> = factors.iter().map(|s| self.m.hopf.parse(s).expect("hopf element")).collect();
        scaled(&coef, &self.elem(vi, &hs))
    }

    pub fn label(&self, k: &(usize, Vec<HMono>)) -> String {
        let mut parts = vec![self.m.basis[k.0].clone()];
        parts.extend(k.1.iter().map(|m| self.m.hopf.format_hmono(m)));
        parts.join(" ⊗ ")
    }

    pub fn format(&self, x: &HChain) -> String {
        crate::lie::format_combination(x.iter().map(|(k, c)| (self.label(k), c.clone())))
    }

    // ---- cocyclic identities

    /// Checks the cosimplicial, cyclic and mixed relations on each sample, plus
    /// b² = 0, B² = 0 and bB + Bb = 0. Samples should be normalized cochains
    /// (factors in the augmentation ideal) for the B relations.
    pub fn verify_cocyclic_identities(&self, samples: &[HChain]) -> Result<(), CocyclicViolation> {
        let results = crate::par::map(samples, |x| self.verify_one(x));
        results.into_iter().collect::<Result<Vec<()>, _>>().map(|_| ())
    }

    fn verify_one(&self, x: &HChain) -> Result<(), CocyclicViolation> {
        let Some(q) = Self::degree(x) else { return Ok(()) };
        let check = |name: String, a: HChain, b: HChain| -> Result<(), CocyclicViolation> {
            let r = sub_maps(&a, &b);
            if r.is_empty() {
                Ok(())
            } else {
                Err(CocyclicViolation { relation: name, witness: self.format(x), residual: self.format(&r) })
            }
        };
        // ∂_j ∂_i = ∂_i ∂_{j−1}, i < j
        for j in 1..=q + 2 {
            for i in 0..j {
                check(
                    format!("d{j} d{i} = d{i} d{}", j - 1),
                    self.coface(j, &self.coface(i, x)),
                    self.coface(i, &self.coface(j - 1, x)),
                )?;
            }
        }
        // σ_j σ_i = σ_i σ_{j+1}, i ≤ j
        if q >= 2 {
            for j in 0..q - 1 {
                for i in 0..=j {
                    check(
                        format!("s{j} s{i} = s{i} s{}", j + 1),
                        self.codegeneracy(j, &self.codegeneracy(i, x)),
                        self.codegeneracy(i, &self.codegeneracy(j + 1, x)),
                    )?;
                }
            }
        }
        // σ_j ∂_i
        for j in 0..=q {
            for i in 0..=q + 1 {
                let lhs = self.codegeneracy(j, &self.coface(i, x));
                let rhs = if i < j {
                    self.coface(i, &self.codegeneracy(j - 1, x))
                } else if i == j || i == j + 1 {
                    x.clone()
                } else {
                    self.coface(i - 1, &self.codegeneracy(j, x))
                };
                check(format!("s{j} d{i}"), lhs, rhs)?;
            }
        }
        // τ ∂_i = ∂_{i−1} τ, τ ∂_0 = ∂_{q+1}
        let tx = self.tau(x);
        for i in 1..=q + 1 {
            check(format!("t d{i} = d{} t", i - 1), self.tau(&self.coface(i, x)), self.coface(i - 1, &tx))?;
        }
        check("t d0 = d_last".into(), self.tau(&self.coface(0, x)), self.coface(q + 1, x))?;
        // τ σ_i = σ_{i−1} τ, τ σ_0 = σ_last τ²
        if q >= 1 {
            for i in 1..q {
                check(
                    format!("t s{i} = s{} t", i - 1),
                    self.tau(&self.codegeneracy(i, x)),
                    self.codegeneracy(i - 1, &tx),
                )?;
            }
            check(
                "t s0 = s_last t^2".into(),
                self.tau(&self.codegeneracy(0, x)),
                self.codegeneracy(q - 1, &self.tau(&tx)),
            )?;
        }
        check(format!("t^{} = id", q + 1), self.tau_pow(x, q + 1), x.clone())?;
        check("b^2 = 0".into(), self.b(&self.b(x)), HChain::new())?;
        let bx = self.connes_b(x);
        check("B = B_general".into(), bx.clone(), self.connes_b_general(x))?;
        check("B^2 = 0".into(), self.connes_b(&bx), HChain::new())?;
        let mut mixed = self.b(&bx);
        axpy(&mut mixed, &Q::one(), &self.connes_b(&self.b(x)));
        check("bB + Bb = 0".into(), mixed, HChain::new())?;
        Ok(())
    }

    /// Residual of each named differential on `x`.
    pub fn verify_cocycle(&self, x: &HChain) -> Result<(), Vec<(String, String)>> {
        let mut bad = Vec::new();
        let bx = self.b(x);
        if !bx.is_empty() {
            bad.push(("b".into(), self.format(&bx)));
        }
        let cb = self.connes_b(x);
        if !cb.is_empty() {
            bad.push(("B".into(), self.format(&cb)));
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(bad)
        }
    }
}

/// Random-free sample set: all tensors of `q` monomials of degree 1..=max_deg
/// drawn from `monos`, paired with every basis vector.
pub fn basis_tensors(dim: usize, monos: &[HMono], q: usize) -> Vec<HChain> {
    let mut keys: Vec<Vec<HMono>> = vec![Vec::new()];
    for _ in 0..q {
        let mut next = Vec::new();
        for k in &keys {
            for m in monos {
                let mut k2 = k.clone();
                k2.push(m.clone());
                next.push(k2);
            }
        }
        keys = next;
    }
    let mut out = Vec::new();
    for v in 0..dim {
        for k in &keys {
            let mut x = HChain::new();
            x.insert((v, k.clone()), Q::one());
            out.push(x);
        }
    }
    out
}

pub fn signed(c: i64, x: &HChain) -> HChain {
    scaled(&qi(c), x)
}
