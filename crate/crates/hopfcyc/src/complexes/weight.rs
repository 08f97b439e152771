//! The weight operator ad̃Y on C(H1S-cop, V).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::cyclic::HChain;
use super::ComplexError;
use crate::exact::{add_to, axpy, SparseVec, Q};
use crate::hopf::{HMono, HopfElement};
use crate::sayd::HModule;

pub struct WeightOperator<'a> {
    pub m: &'a HModule,
    /// index of the grading element in the Lie basis
    pub y: usize,
}

impl<'a> WeightOperator<'a> {
    pub fn new(m: &'a HModule, y: usize) -> Self {
        Self { m, y }
    }

    /// [Y, h] = Y h − h Y
    pub fn ad(&self, h: &HMono) -> HopfElement {
        let hopf = &self.m.hopf;
        let y = hopf.u_gen(self.y);
        let e = hopf.mono_elem(h);
        let mut out = hopf.mul(&y, &e);
        axpy(&mut out, &-Q::one(), &hopf.mul(&e, &y));
        out
    }

    /// ad̃Y(v ⊗ h̃) = v ⊗ Σ_k h^1 ⊗ … ⊗ [Y, h^k] ⊗ … ⊗ h^q − v ◁ Y ⊗ h̃
    pub fn apply(&self, x: &HChain) -> HChain {
        let hopf = &self.m.hopf;
        let mut out = HChain::new();
        for ((v, hs), c) in x {
            for k in 0..hs.len() {
                for (m, d) in self.ad(&hs[k]) {
                    let mut h2 = hs.clone();
                    h2[k] = m;
                    add_to(&mut out, (*v, h2), c * d);
                }
            }
            let mut e = SparseVec::new();
            e.insert(*v, Q::one());
            let ym = (hopf.fzero(), hopf.u.mono(&[(self.y, 1)]));
            for (w, a) in self.m.act_mono(&e, &ym, false) {
                add_to(&mut out, (w, hs.clone()), -(c * a));
            }
        }
        out
    }

    /// Eigenvalue of ad̃Y on a basis tensor, if it is an eigenvector.
    pub fn weight_of(&self, key: &(usize, Vec<HMono>)) -> Option<Q> {
        let mut x = HChain::new();
        x.insert(key.clone(), Q::one());
        let y = self.apply(&x);
        match y.len() {
            0 => Some(Q::zero()),
            1 => y.get(key).cloned(),
            _ => None,
        }
    }

    pub fn weight_decompose(&self, x: &HChain) -> Result<BTreeMap<Q, HChain>, ComplexError> {
        let mut out: BTreeMap<Q, HChain> = BTreeMap::new();
        for (k, c) in x {
            let w = self.weight_of(k).ok_or_else(|| {
                ComplexError::Precondition("ad̃Y is not diagonal on this basis tensor".into())
            })?;
            out.entry(w).or_default().insert(k.clone(), c.clone());
        }
        Ok(out)
    }

    /// True when every term of x has weight w.
    pub fn is_homogeneous(&self, x: &HChain, w: &Q) -> bool {
        x.keys().all(|k| self.weight_of(k).as_ref() == Some(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::cyclic::HopfCyclic;
    use crate::complexes::goldens::{c_even, c_odd};
    use crate::exact::qi;
    use crate::hopf::h1s_cop;
    use crate::sayd::schwarzian_4dim;
    use std::sync::Arc;

    #[test]
    fn fixed_weights() {
        let s = schwarzian_4dim(Arc::new(h1s_cop(6))).unwrap();
        let c = HopfCyclic::new(&s.module);
        let w = WeightOperator::new(&s.module, 1);
        for (v, f, expect) in [("1", "d1", 1), ("RX", "d1*X", 1), ("RY", "Y", 0), ("RZ", "1", 1), ("RX", "1", -1)] {
            let x = c.term(Q::one(), v, &[f]);
            let k = x.keys().next().unwrap();
            assert_eq!(w.weight_of(k), Some(qi(expect)), "{v} {f}");
        }
    }

    #[test]
    fn goldens_have_weight_one() {
        let s = schwarzian_4dim(Arc::new(h1s_cop(6))).unwrap();
        let c = HopfCyclic::new(&s.module);
        let w = WeightOperator::new(&s.module, 1);
        for x in [c_odd(&c), c_even(&c)] {
            let d = w.weight_decompose(&x).unwrap();
            assert_eq!(d.keys().cloned().collect::<Vec<_>>(), vec![qi(1)]);
        }
    }

    #[test]
    fn operators_preserve_weight() {
        use crate::complexes::cyclic::basis_tensors;
        let s = schwarzian_4dim(Arc::new(h1s_cop(6))).unwrap();
        let c = HopfCyclic::new(&s.module);
        let w = WeightOperator::new(&s.module, 1);
        let h = &s.module.hopf;
        let monos = vec![h.hmono(&[(0, 1)], &[]), h.hmono(&[], &[(0, 1)]), h.hmono(&[], &[(1, 1)]), h.hmono(&[(0, 1)], &[(1, 1)])];
        for q in 1..=2 {
            for x in basis_tensors(4, &monos, q) {
                let k = x.keys().next().unwrap();
                let wt = w.weight_of(k).unwrap();
                for y in [c.b(&x), c.connes_b(&x), c.tau(&x)] {
                    assert!(w.is_homogeneous(&y, &wt), "{}", c.format(&x));
                }
            }
        }
    }
}
