//! The embedding W(pgl(n), ℂ) → W(gl(n), V_nProj).

use std::collections::BTreeMap;

use super::lie::{LieChain, LieComplex};
use super::wedge::Wedge;
use super::ComplexError;
use crate::exact::{add_to, sub_maps, Q};
use crate::lie::{gl, pgl, LieAlgebra};
use crate::sayd::{v_n_proj, SaydData};

pub struct WeilEmbedding {
    pub n: usize,
    pub pgl: LieAlgebra,
    pub gl: LieAlgebra,
    pub trivial: SaydData,
    pub v: SaydData,
    subset_index: BTreeMap<Vec<usize>, usize>,
}

/// A failed square on one basis element.
#[derive(Debug, Clone)]
pub struct WeilResidual {
    pub source: String,
    pub residual: String,
}

impl WeilEmbedding {
    pub fn new(n: usize) -> Self {
        let p = pgl(n);
        let trivial = SaydData::trivial("C", vec!["1".into()], p.dim());
        let v = v_n_proj(n);
        let mut subsets: Vec<Vec<usize>> =
            (0u32..(1u32 << (2 * n))).map(|mask| (0..2 * n).filter(|b| mask & (1 << b) != 0).collect()).collect();
        subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        assert_eq!(subsets.len(), v.dim());
        let subset_index = subsets.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        Self { n, pgl: p, gl: gl(n), trivial, v, subset_index }
    }

    pub fn source(&self) -> LieComplex<'_> {
        LieComplex::new(&self.pgl, &self.trivial)
    }

    pub fn target(&self) -> LieComplex<'_> {
        LieComplex::new(&self.gl, &self.v)
    }

    /// θ^I θ^J_K θ_L ↦ (−1)^{|I||J|} θ^J_K ⊗ θ^I θ_L
    pub fn embed(&self, x: &LieChain) -> LieChain {
        let n = self.n;
        let mut out = LieChain::new();
        for ((w, _), c) in x {
            let xs: Vec<usize> = w.iter().copied().filter(|&i| i < n).collect();
            let ys: Wedge = w.iter().copied().filter(|&i| i >= n && i < n + n * n).map(|i| i - n).collect();
            let zs: Vec<usize> = w.iter().copied().filter(|&i| i >= n + n * n).map(|i| i - n * n).collect();
            let mut bits = xs.clone();
            bits.extend(zs);
            let vi = self.subset_index[&bits];
            let sign = if (xs.len() * ys.len()) % 2 == 0 { c.clone() } else { -c.clone() };
            add_to(&mut out, (ys, vi), sign);
        }
        out
    }

    /// (d_CE + d_K) ∘ embed − embed ∘ d on the basis element, zero when the square commutes.
    pub fn residual(&self, x: &LieChain) -> LieChain {
        let lhs = self.target().d_total(&self.embed(x));
        let rhs = self.embed(&self.source().d_total(x));
        sub_maps(&lhs, &rhs)
    }

    /// Check the square on every basis element of degree ≤ max_degree.
    pub fn verify(&self, max_degree: usize) -> Result<usize, Vec<WeilResidual>> {
        let src = self.source();
        let tgt = self.target();
        let mut keys = Vec::new();
        for q in 0..=max_degree.min(self.pgl.dim()) {
            keys.extend(src.basis(q));
        }
        let bad: Vec<WeilResidual> = crate::par::map(&keys, |k| {
            let mut x = LieChain::new();
            x.insert(k.clone(), Q::from_integer(1.into()));
            let r = self.residual(&x);
            (!r.is_empty()).then(|| WeilResidual { source: src.label_w(k), residual: tgt.format_w(&r) })
        })
        .into_iter()
        .flatten()
        .collect();
        if bad.is_empty() {
            Ok(keys.len())
        } else {
            Err(bad)
        }
    }

    pub fn check(&self, max_degree: usize) -> Result<usize, ComplexError> {
        self.verify(max_degree).map_err(|bad| {
            ComplexError::Precondition(format!("square fails on {} ({})", bad[0].source, bad[0].residual))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::lie::chain;

    #[test]
    fn degree_one_goldens() {
        let e = WeilEmbedding::new(2);
        // θ^j_k ↦ θ^j_k ⊗ 1
        let y = 2 + 1;
        assert_eq!(e.embed(&chain(vec![y], 0)), chain(vec![1], 0));
        for i in 0..e.pgl.dim() {
            assert!(e.residual(&chain(vec![i], 0)).is_empty(), "{i}");
        }
    }

    #[test]
    fn squares_commute() {
        assert_eq!(WeilEmbedding::new(1).verify(3).map_err(|b| b.len()), Ok(8));
        let r = WeilEmbedding::new(2).verify(2);
        assert!(r.is_ok(), "{:#?}", r);
    }

    #[test]
    fn unit_only_coaction_breaks_the_square() {
        let mut e = WeilEmbedding::new(2);
        for m in e.v.coaction.iter_mut() {
            for row in m.a.iter_mut().skip(1) {
                row.iter_mut().for_each(|c| *c = Q::from_integer(0.into()));
            }
        }
        let bad = e.verify(2).unwrap_err();
        assert_eq!(bad.len(), 12);
        assert!(WeilEmbedding::new(1).verify(3).is_ok());
    }

    #[test]
    fn n2_square_through_degree_four() {
        let e = WeilEmbedding::new(2);
        assert!(e.verify(4).is_ok());
    }
}
