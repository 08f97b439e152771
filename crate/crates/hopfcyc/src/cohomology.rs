//! Cohomology of finite complexes over ℚ: Betti numbers, periodic totals,
//! representatives, cocycle checks and E₁ pages of filtered complexes.

use std::collections::BTreeMap;

use num_traits::One;
use serde::Serialize;

use crate::complexes::lie::LieComplex;
use crate::complexes::{ComplexError, ComplexHandle, PeriodicHandle};
use crate::exact::{add_to, image_basis, kernel_basis, quotient_basis, Echelon, SparseMatrix, SparseVec, Q};
use crate::lie::LieAlgebra;
use crate::sayd::{HModule, SaydData};

/// A cochain written as (basis label, coefficient) pairs.
pub type Labelled = Vec<(String, String)>;

#[derive(Debug, Clone, Serialize)]
pub struct CohomologyResult {
    pub name: String,
    pub betti: Vec<usize>,
    pub representatives: Vec<Vec<Labelled>>,
    #[serde(skip)]
    pub raw: Vec<Vec<SparseVec>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PeriodicResult {
    pub name: String,
    pub even: usize,
    pub odd: usize,
    pub even_representatives: Vec<Labelled>,
    pub odd_representatives: Vec<Labelled>,
    #[serde(skip)]
    pub even_raw: Vec<SparseVec>,
    #[serde(skip)]
    pub odd_raw: Vec<SparseVec>,
}

fn labelled(v: &SparseVec, labels: &[String]) -> Labelled {
    v.iter().map(|(i, c)| (labels[*i].clone(), c.to_string())).collect()
}

/// Kernel of `out` modulo the image of `inc`, both acting on a space of dimension `dim`.
fn homology(dim: usize, out: Option<&SparseMatrix>, inc: Option<&SparseMatrix>) -> Vec<SparseVec> {
    let ker = match out {
        Some(m) => kernel_basis(m),
        None => (0..dim).map(|i| std::iter::once((i, Q::one())).collect()).collect(),
    };
    let img = inc.map(image_basis).unwrap_or_default();
    quotient_basis(&img, &ker)
}

pub fn cohomology(h: &ComplexHandle) -> Result<CohomologyResult, ComplexError> {
    let dims = h.dims();
    let raw: Vec<Vec<SparseVec>> =
        crate::par::map(&(0..dims.len()).collect::<Vec<_>>(), |&q| homology(dims[q], h.out_map(q), h.in_map(q)));
    for (q, reps) in raw.iter().enumerate() {
        for r in reps {
            debug_assert!(h.out_map(q).map_or(true, |m| m.mul_vec(r).is_empty()));
        }
    }
    Ok(CohomologyResult {
        name: h.name.clone(),
        betti: raw.iter().map(|r| r.len()).collect(),
        representatives: raw.iter().enumerate().map(|(q, r)| r.iter().map(|v| labelled(v, &h.labels[q])).collect()).collect(),
        raw,
    })
}

pub fn periodic(h: &PeriodicHandle) -> Result<PeriodicResult, ComplexError> {
    if !h.square_is_zero() {
        return Err(ComplexError::NotAComplex { name: h.name.clone(), degree: 0 });
    }
    let even_raw = homology(h.even_labels.len(), Some(&h.d_even), Some(&h.d_odd));
    let odd_raw = homology(h.odd_labels.len(), Some(&h.d_odd), Some(&h.d_even));
    Ok(PeriodicResult {
        name: h.name.clone(),
        even: even_raw.len(),
        odd: odd_raw.len(),
        even_representatives: even_raw.iter().map(|v| labelled(v, &h.even_labels)).collect(),
        odd_representatives: odd_raw.iter().map(|v| labelled(v, &h.odd_labels)).collect(),
        even_raw,
        odd_raw,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// True when v is a coboundary.
pub fn in_image(m: &SparseMatrix, v: &SparseVec) -> bool {
    Echelon::from_vectors(&image_basis(m)).contains(v)
}

impl PeriodicHandle {
    pub fn is_cocycle(&self, parity: Parity, v: &SparseVec) -> bool {
        match parity {
            Parity::Even => self.d_even.mul_vec(v).is_empty(),
            Parity::Odd => self.d_odd.mul_vec(v).is_empty(),
        }
    }

    pub fn is_coboundary(&self, parity: Parity, v: &SparseVec) -> bool {
        match parity {
            Parity::Even => in_image(&self.d_odd, v),
            Parity::Odd => in_image(&self.d_even, v),
        }
    }

    /// Coefficients λ with a − Σ λ_i reps_i a coboundary, if a is a cocycle in
    /// the span of the classes of `reps`.
    pub fn class_coordinates(&self, parity: Parity, a: &SparseVec, reps: &[SparseVec]) -> Option<Vec<Q>> {
        if !self.is_cocycle(parity, a) {
            return None;
        }
        let (dim, inc) = match parity {
            Parity::Even => (self.even_labels.len(), &self.d_odd),
            Parity::Odd => (self.odd_labels.len(), &self.d_even),
        };
        let mut gens = reps.to_vec();
        gens.extend(image_basis(inc));
        let c = crate::exact::coordinates(&gens, std::slice::from_ref(a), dim)?;
        Some((0..reps.len()).map(|i| c[0].get(&i).cloned().unwrap_or_default()).collect())
    }

    /// a and b are cocycles differing by a coboundary.
    pub fn cohomologous(&self, parity: Parity, a: &SparseVec, b: &SparseVec) -> bool {
        let mut diff = a.clone();
        for (i, c) in b {
            add_to(&mut diff, *i, -c.clone());
        }
        self.is_cocycle(parity, a) && self.is_cocycle(parity, b) && self.is_coboundary(parity, &diff)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LieKind {
    /// W(g, V) with d_CE + d_K
    Koszul,
    /// C(g, V) with ∂_CE + ∂_K
    Cyclic,
}

/// The SAYD conditions under which W(g, V) and C(g, V) are complexes.
pub fn sayd_precondition(g: &LieAlgebra, v: &SaydData) -> Result<(), ComplexError> {
    for (name, r) in v.check_all(g) {
        if name == "stable" {
            continue;
        }
        if let Err(e) = r {
            return Err(ComplexError::Precondition(format!("{name}: {e}")));
        }
    }
    Ok(())
}

pub fn periodic_cyclic_lie(g: &LieAlgebra, v: &SaydData, kind: LieKind) -> Result<(PeriodicHandle, PeriodicResult), ComplexError> {
    sayd_precondition(g, v)?;
    let c = LieComplex::new(g, v);
    let h = match kind {
        LieKind::Koszul => c.koszul_periodic()?,
        LieKind::Cyclic => c.cyclic_periodic()?,
    };
    let r = periodic(&h)?;
    Ok((h, r))
}

/// Apply each named operator to x; the residuals of those that do not vanish.
pub fn verify_cocycle<K: Ord + Clone>(
    x: &BTreeMap<K, Q>,
    ops: &[(&str, &dyn Fn(&BTreeMap<K, Q>) -> BTreeMap<K, Q>)],
) -> Result<(), Vec<(String, BTreeMap<K, Q>)>> {
    let bad: Vec<(String, BTreeMap<K, Q>)> =
        ops.iter().map(|(n, f)| (n.to_string(), f(x))).filter(|(_, r)| !r.is_empty()).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad)
    }
}

// ---- E₁ pages

/// One slot of a filtered complex: the ambient dimension and the increasing
/// chain F_0 ⊆ F_1 ⊆ … ⊆ F_top = everything, each level a spanning list.
#[derive(Debug, Clone)]
pub struct FilteredSlot {
    pub dim: usize,
    pub levels: Vec<Vec<SparseVec>>,
}

impl FilteredSlot {
    fn level(&self, j: isize) -> Vec<SparseVec> {
        if j < 0 {
            return Vec::new();
        }
        match self.levels.get(j as usize) {
            Some(l) => l.clone(),
            None => (0..self.dim).map(|i| std::iter::once((i, Q::one())).collect()).collect(),
        }
    }
}

fn rank(vs: &[SparseVec]) -> usize {
    Echelon::from_vectors(vs).rank()
}

/// A differential between slots of a filtered complex.
pub struct FilteredMap<'a> {
    pub src: usize,
    pub tgt: usize,
    pub d: &'a SparseMatrix,
}

/// dim H(F_j / F_{j−1}) in every slot, for j = 0..=max_j. Slots without an
/// outgoing or incoming map are treated as having a zero one.
pub fn e1_page(slots: &[FilteredSlot], maps: &[FilteredMap], max_j: usize) -> Result<Vec<Vec<usize>>, ComplexError> {
    let mut out = Vec::new();
    for j in 0..=max_j as isize {
        let a: Vec<Vec<SparseVec>> = slots.iter().map(|s| s.level(j)).collect();
        let b: Vec<Vec<SparseVec>> = slots.iter().map(|s| s.level(j - 1)).collect();
        for m in maps {
            let e = Echelon::from_vectors(&a[m.tgt]);
            if a[m.src].iter().any(|v| !e.contains(&m.d.mul_vec(v))) {
                return Err(ComplexError::Filtration(format!("slot {} to slot {} at level {j}", m.src, m.tgt)));
            }
        }
        let mut row = Vec::new();
        for s in 0..slots.len() {
            let dim_a = rank(&a[s]);
            let mut dim_k = dim_a;
            if let Some(m) = maps.iter().find(|m| m.src == s) {
                let mut imgs: Vec<SparseVec> = a[s].iter().map(|v| m.d.mul_vec(v)).collect();
                let bt = rank(&b[m.tgt]);
                imgs.extend(b[m.tgt].iter().cloned());
                dim_k = dim_a - (rank(&imgs) - bt);
            }
            let mut bnd = b[s].clone();
            if let Some(m) = maps.iter().find(|m| m.tgt == s) {
                bnd.extend(a[m.src].iter().map(|v| m.d.mul_vec(v)));
            }
            row.push(dim_k - rank(&bnd));
        }
        out.push(row);
    }
    Ok(out)
}

/// The filtration F_jV lifted to a slot whose keys are (form, V-index) pairs.
fn lift_levels<W: Ord + Clone>(keys: &[(W, usize)], levels: &[Vec<SparseVec>]) -> FilteredSlot {
    let idx: BTreeMap<(W, usize), usize> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let mut forms: Vec<W> = keys.iter().map(|k| k.0.clone()).collect();
    forms.dedup();
    let lv = levels
        .iter()
        .map(|l| {
            let mut vs = Vec::new();
            for w in &forms {
                for f in l {
                    let v: SparseVec = f.iter().filter_map(|(i, c)| idx.get(&(w.clone(), *i)).map(|k| (*k, c.clone()))).collect();
                    if !v.is_empty() {
                        vs.push(v);
                    }
                }
            }
            vs
        })
        .collect();
    FilteredSlot { dim: keys.len(), levels: lv }
}

/// E₁ of W(g, V) filtered by W(g, F_jV): per j, (even, odd) dimensions.
pub fn e1_lie_periodic(g: &LieAlgebra, v: &SaydData, levels: &[Vec<SparseVec>], max_j: usize) -> Result<Vec<(usize, usize)>, ComplexError> {
    let c = LieComplex::new(g, v);
    let h = c.koszul_periodic()?;
    let (even, odd) = c.periodic_keys();
    let slots = vec![lift_levels(&even, levels), lift_levels(&odd, levels)];
    let maps = [FilteredMap { src: 0, tgt: 1, d: &h.d_even }, FilteredMap { src: 1, tgt: 0, d: &h.d_odd }];
    Ok(e1_page(&slots, &maps, max_j)?.into_iter().map(|r| (r[0], r[1])).collect())
}

/// E₁ of the Chevalley–Eilenberg complex filtered by F_jV: per j, Betti numbers.
pub fn e1_lie_ce(g: &LieAlgebra, v: &SaydData, levels: &[Vec<SparseVec>], max_j: usize) -> Result<Vec<Vec<usize>>, ComplexError> {
    let c = LieComplex::new(g, v);
    let h = c.ce_complex()?;
    let n = c.n();
    let slots: Vec<FilteredSlot> = (0..=n).map(|q| lift_levels(&c.basis(q), levels)).collect();
    let maps: Vec<FilteredMap> = (0..n).map(|q| FilteredMap { src: q, tgt: q + 1, d: &h.d[q] }).collect();
    e1_page(&slots, &maps, max_j)
}

/// True when the coaction of a module over a bicrossed product maps each
/// level F_p into H ⊗ F_p.
pub fn coaction_respects(m: &HModule, levels: &[Vec<SparseVec>]) -> bool {
    levels.iter().all(|l| {
        let e = Echelon::from_vectors(l);
        l.iter().all(|v| {
            let mut parts: BTreeMap<crate::hopf::HMono, SparseVec> = BTreeMap::new();
            for ((h, k), c) in m.coact(v) {
                add_to(parts.entry(h).or_default(), k, c);
            }
            parts.values().all(|p| e.contains(p))
        })
    })
}

/// Dimensions of the graded pieces F_jV / F_{j−1}V, j = 0..=max_j.
pub fn graded_dims(levels: &[Vec<SparseVec>], dim: usize, max_j: usize) -> Vec<usize> {
    let at = |j: isize| -> usize {
        if j < 0 {
            0
        } else {
            levels.get(j as usize).map_or(dim, |l| rank(l))
        }
    };
    (0..=max_j as isize).map(|j| at(j) - at(j - 1)).collect()
}

/// E₁ data of the truncated C(H, V) filtered by F_jV: for each j, the
/// dimension of (F_j/F_{j−1}) ⊗ H_{≤cap}^{⊗q}, q = 0..=max_q. Where that space
/// is zero the E₁ term vanishes.
#[derive(Debug, Clone, Serialize)]
pub struct HopfE1 {
    pub filtration_dims: Vec<usize>,
    pub graded_dims: Vec<usize>,
    pub cochain_dims: Vec<Vec<u128>>,
}

pub fn e1_hopf_truncated(
    m: &HModule,
    levels: &[Vec<SparseVec>],
    monomials_up_to_cap: usize,
    max_j: usize,
    max_q: u32,
) -> Result<HopfE1, ComplexError> {
    if !coaction_respects(m, levels) {
        return Err(ComplexError::Filtration("the H-coaction leaves a level".into()));
    }
    let gd = graded_dims(levels, m.basis.len(), max_j);
    let cochain_dims = gd.iter().map(|&g| (0..=max_q).map(|q| g as u128 * (monomials_up_to_cap as u128).pow(q)).collect()).collect();
    Ok(HopfE1 { filtration_dims: levels.iter().map(|l| rank(l)).collect(), graded_dims: gd, cochain_dims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::complexes::lie::chain;
    use crate::lie::{sl2_xyz, LieAlgebra};
    use crate::sayd::{koszul_truncated, SaydData};

    #[test]
    fn sl2_trivial_and_abelian() {
        let g = sl2_xyz();
        let v = SaydData::trivial("C", vec!["1".into()], 3);
        let r = cohomology(&LieComplex::new(&g, &v).ce_complex().unwrap()).unwrap();
        assert_eq!(r.betti, vec![1, 0, 0, 1]);
        let a = LieAlgebra::abelian("ab(1)", vec!["X".into()]);
        let v = SaydData::trivial("C", vec!["1".into()], 1);
        let r = cohomology(&LieComplex::new(&a, &v).ce_complex().unwrap()).unwrap();
        assert_eq!(r.betti, vec![1, 1]);
        let (_, p) = periodic_cyclic_lie(&a, &v, LieKind::Koszul).unwrap();
        assert_eq!((p.even, p.odd), (1, 1));
    }

    #[test]
    fn hp_sl2_koszul() {
        let g = sl2_xyz();
        let v = koszul_truncated(&g);
        let (h, r) = periodic_cyclic_lie(&g, &v, LieKind::Koszul).unwrap();
        assert_eq!((r.even, r.odd), (1, 1));
        let c = LieComplex::new(&g, &v);
        let (even, odd) = c.periodic_keys();
        let to = |keys: &[(Vec<usize>, usize)], el: &crate::complexes::lie::LieChain| -> SparseVec {
            el.iter().map(|(k, c)| (keys.iter().position(|x| x == k).unwrap(), c.clone())).collect()
        };
        let one = to(&even, &chain(vec![], 0));
        let l = h.class_coordinates(Parity::Even, &one, &r.even_raw).unwrap();
        assert!(!l[0].is_zero());
        let mut odd_rep = crate::exact::scaled(&crate::exact::qi(2), &chain(vec![0], 3));
        crate::exact::axpy(&mut odd_rep, &-Q::one(), &chain(vec![1], 2));
        crate::exact::axpy(&mut odd_rep, &Q::one(), &chain(vec![0, 1, 2], 0));
        let w = to(&odd, &odd_rep);
        let l = h.class_coordinates(Parity::Odd, &w, &r.odd_raw).unwrap();
        assert!(!l[0].is_zero());
        assert!(!h.is_coboundary(Parity::Odd, &w));
        assert!(h.is_cocycle(Parity::Even, &one) && !h.is_coboundary(Parity::Even, &one));
    }

    #[test]
    fn e1_sl2() {
        let g = sl2_xyz();
        let v = koszul_truncated(&g);
        let f = v.filtration().unwrap();
        assert_eq!(f.dims(), vec![3, 4]);
        let p = e1_lie_periodic(&g, &v, &f.levels, 3).unwrap();
        assert_eq!(p, vec![(0, 0), (1, 1), (0, 0), (0, 0)]);
        let ce = e1_lie_ce(&g, &v, &f.levels, 2).unwrap();
        assert_eq!(ce[0], vec![0, 0, 0, 0]);
        assert_eq!(ce[1], vec![1, 0, 0, 1]);
        let f0 = v.restrict("F0V", &f.levels[0]).unwrap();
        let r = cohomology(&LieComplex::new(&g, &f0).ce_complex().unwrap()).unwrap();
        assert_eq!(r.betti, vec![0, 0, 0, 0]);
        // a single level reproduces ordinary cohomology
        let all: Vec<SparseVec> = (0..4).map(|i| std::iter::once((i, Q::one())).collect()).collect();
        let (_, full) = periodic_cyclic_lie(&g, &v, LieKind::Koszul).unwrap();
        assert_eq!(e1_lie_periodic(&g, &v, &[all], 0).unwrap(), vec![(full.even, full.odd)]);
    }

    #[test]
    fn e1_h1s_vanishes_above_one() {
        use crate::hopf::h1s_cop;
        use std::sync::Arc;
        let h = Arc::new(h1s_cop(6));
        let s = crate::sayd::schwarzian_4dim(h.clone()).unwrap();
        let monos = h.monomials(6).len();
        assert_eq!(monos, 84);
        let levels = s.base.filtration().unwrap().levels;
        let e = e1_hopf_truncated(&s.module, &levels, monos, 4, 3).unwrap();
        assert_eq!(e.filtration_dims, vec![3, 4]);
        assert_eq!(e.graded_dims, vec![3, 1, 0, 0, 0]);
        for j in 2..=4 {
            assert!(e.cochain_dims[j].iter().all(|&d| d == 0));
        }
        assert_eq!(e.cochain_dims[1], vec![1, 84, 84 * 84, 84 * 84 * 84]);
    }
}
