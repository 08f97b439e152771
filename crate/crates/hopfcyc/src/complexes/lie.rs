//! Lie algebra (co)chains with SAYD coefficients: W(g,V) = ∧g*⊗V with
//! d_CE + d_K, and C(g,V) = ∧g⊗V with ∂_CE + ∂_K.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::wedge::{self, Wedge};
use super::{index_map, matrix_of, ComplexError, ComplexHandle, PeriodicHandle};
use crate::exact::{add_to, axpy, kernel_basis, qi, SparseMatrix, SparseVec, Q};
use crate::lie::LieAlgebra;
use crate::sayd::SaydData;

/// θ^I ⊗ v (or X_I ⊗ v on the homology side), keyed by (I, index of v).
pub type LieChain = BTreeMap<(Wedge, usize), Q>;

pub fn chain(w: Wedge, v: usize) -> LieChain {
    let mut c = LieChain::new();
    c.insert((w, v), Q::one());
    c
}

#[derive(Debug, Clone, Copy)]
pub struct LieComplex<'a> {
    pub g: &'a LieAlgebra,
    pub v: &'a SaydData,
}

impl<'a> LieComplex<'a> {
    pub fn new(g: &'a LieAlgebra, v: &'a SaydData) -> Self {
        Self { g, v }
    }

    pub fn n(&self) -> usize {
        self.g.dim()
    }

    /// d θ^i = −Σ_{j<k} C^i_{jk} θ^j∧θ^k
    pub fn d_dr_gen(&self, i: usize) -> BTreeMap<Wedge, Q> {
        let mut out = BTreeMap::new();
        for j in 0..self.n() {
            for k in j + 1..self.n() {
                let c = self.g.constant(j, k, i);
                if !c.is_zero() {
                    add_to(&mut out, vec![j, k], -c);
                }
            }
        }
        out
    }

    /// de Rham differential of ∧g*, a graded derivation.
    pub fn d_dr(&self, w: &[usize]) -> BTreeMap<Wedge, Q> {
        let mut out = BTreeMap::new();
        for (pos, &i) in w.iter().enumerate() {
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            let head = &w[..pos];
            let tail = &w[pos + 1..];
            for (two, c) in self.d_dr_gen(i) {
                let Some((s1, mid)) = wedge::mul(&two, tail) else { continue };
                let Some((s2, full)) = wedge::mul(head, &mid) else { continue };
                add_to(&mut out, full, c * qi(sign * s1 * s2));
            }
        }
        out
    }

    fn act(&self, v: usize, i: usize) -> SparseVec {
        self.v.action[i].row_sparse(v)
    }

    fn coact(&self, v: usize, j: usize) -> SparseVec {
        self.v.coaction[j].row_sparse(v)
    }

    /// d_CE(β⊗v) = dβ⊗v − Σ_i θ^i∧β ⊗ v·X_i
    pub fn d_ce(&self, w: &LieChain) -> LieChain {
        let mut out = LieChain::new();
        for ((beta, v), c) in w {
            for (b2, d) in self.d_dr(beta) {
                add_to(&mut out, (b2, *v), c * d);
            }
            for i in 0..self.n() {
                let Some((s, b2)) = wedge::insert_front(i, beta) else { continue };
                for (u, e) in self.act(*v, i) {
                    add_to(&mut out, (b2.clone(), u), -(c * e * qi(s)));
                }
            }
        }
        out
    }

    /// d_K(α⊗v) = Σ_j ι(X_j)α ⊗ v_j, where ∇v = Σ_j X_j ⊗ v_j
    pub fn d_k(&self, w: &LieChain) -> LieChain {
        let mut out = LieChain::new();
        for ((alpha, v), c) in w {
            for j in 0..self.n() {
                let Some((s, a2)) = wedge::contract(j, alpha) else { continue };
                for (u, e) in self.coact(*v, j) {
                    add_to(&mut out, (a2.clone(), u), c * e * qi(s));
                }
            }
        }
        out
    }

    pub fn d_total(&self, w: &LieChain) -> LieChain {
        let mut out = self.d_ce(w);
        axpy(&mut out, &Q::one(), &self.d_k(w));
        out
    }

    /// ∂_CE(X_0∧…∧X_{q−1}⊗v) = Σ_i (−1)^i X_0..X̂_i..⊗v·X_i
    ///   + Σ_{i<j} (−1)^{i+j} [X_i,X_j]∧X_0..X̂_i..X̂_j..⊗v
    pub fn boundary_ce(&self, xi: &LieChain) -> LieChain {
        let mut out = LieChain::new();
        for ((w, v), c) in xi {
            for (i, &xi_i) in w.iter().enumerate() {
                let mut rest = w.clone();
                rest.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                for (u, e) in self.act(*v, xi_i) {
                    add_to(&mut out, (rest.clone(), u), c * e * qi(sign));
                }
            }
            for i in 0..w.len() {
                for j in i + 1..w.len() {
                    let mut rest = w.clone();
                    rest.remove(j);
                    rest.remove(i);
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    for (k, e) in self.g.bracket_basis(w[i], w[j]) {
                        let Some((s, w2)) = wedge::insert_front(*k, &rest) else { continue };
                        add_to(&mut out, (w2, *v), c * e * qi(sign * s));
                    }
                }
            }
        }
        out
    }

    /// ∂_K(ξ⊗v) = Σ_j X_j∧ξ ⊗ v_j
    pub fn boundary_k(&self, xi: &LieChain) -> LieChain {
        let mut out = LieChain::new();
        for ((w, v), c) in xi {
            for j in 0..self.n() {
                let Some((s, w2)) = wedge::insert_front(j, w) else { continue };
                for (u, e) in self.coact(*v, j) {
                    add_to(&mut out, (w2.clone(), u), c * e * qi(s));
                }
            }
        }
        out
    }

    pub fn boundary_total(&self, xi: &LieChain) -> LieChain {
        let mut out = self.boundary_ce(xi);
        axpy(&mut out, &Q::one(), &self.boundary_k(xi));
        out
    }

    pub fn basis(&self, q: usize) -> Vec<(Wedge, usize)> {
        let mut out = Vec::new();
        for w in wedge::subsets(self.n(), q) {
            for v in 0..self.v.dim() {
                out.push((w.clone(), v));
            }
        }
        out
    }

    pub fn label_w(&self, k: &(Wedge, usize)) -> String {
        label(&k.0, &self.g.basis, "θ^", &self.v.basis[k.1])
    }

    pub fn label_c(&self, k: &(Wedge, usize)) -> String {
        label(&k.0, &self.g.basis, "", &self.v.basis[k.1])
    }

    pub fn format_w(&self, w: &LieChain) -> String {
        crate::lie::format_combination(w.iter().map(|(k, c)| (self.label_w(k), c.clone())))
    }

    pub fn format_c(&self, w: &LieChain) -> String {
        crate::lie::format_combination(w.iter().map(|(k, c)| (self.label_c(k), c.clone())))
    }

    /// Chevalley–Eilenberg cochain complex of g with coefficients in V.
    pub fn ce_complex(&self) -> Result<ComplexHandle, ComplexError> {
        self.graded(|x| self.d_ce(x), false, "W", &format!("CE({}, {})", self.g.name, self.v.name))
    }

    /// Chevalley–Eilenberg chain complex ∧g⊗V with ∂_CE.
    pub fn ce_chain_complex(&self) -> Result<ComplexHandle, ComplexError> {
        self.graded(|x| self.boundary_ce(x), true, "C", &format!("CE_*({}, {})", self.g.name, self.v.name))
    }

    fn graded<F>(&self, op: F, descending: bool, side: &str, name: &str) -> Result<ComplexHandle, ComplexError>
    where
        F: Fn(&LieChain) -> LieChain + Sync + Send,
    {
        let n = self.n();
        let bases: Vec<Vec<(Wedge, usize)>> = (0..=n).map(|q| self.basis(q)).collect();
        let mut d = Vec::new();
        for q in 0..=n {
            let tgt = if descending { q.checked_sub(1) } else { Some(q + 1).filter(|&t| t <= n) };
            let Some(t) = tgt else {
                d.push(SparseMatrix::zeros(0, bases[q].len()));
                continue;
            };
            let idx = index_map(&bases[t]);
            d.push(matrix_of(name, &bases[q], &idx, |k| op(&chain(k.0.clone(), k.1)))?);
        }
        let labels = bases
            .iter()
            .map(|b| b.iter().map(|k| if side == "W" { self.label_w(k) } else { self.label_c(k) }).collect())
            .collect();
        ComplexHandle::new(name, labels, d, descending)
    }

    /// Basis keys of the even and odd slots, in the order used by the periodic handles.
    pub fn periodic_keys(&self) -> (Vec<(Wedge, usize)>, Vec<(Wedge, usize)>) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for q in 0..=self.n() {
            let b = self.basis(q);
            if q % 2 == 0 {
                even.extend(b);
            } else {
                odd.extend(b);
            }
        }
        (even, odd)
    }

    /// W(g,V) folded into even/odd slots with d_CE + d_K.
    pub fn koszul_periodic(&self) -> Result<PeriodicHandle, ComplexError> {
        self.periodic(|x| self.d_total(x), true)
    }

    /// C(g,V) folded into even/odd slots with ∂_CE + ∂_K.
    pub fn cyclic_periodic(&self) -> Result<PeriodicHandle, ComplexError> {
        self.periodic(|x| self.boundary_total(x), false)
    }

    fn periodic<F>(&self, op: F, cochain: bool) -> Result<PeriodicHandle, ComplexError>
    where
        F: Fn(&LieChain) -> LieChain + Sync + Send,
    {
        let (even, odd) = self.periodic_keys();
        let name = format!("{}({}, {})", if cochain { "W" } else { "C" }, self.g.name, self.v.name);
        let d_even = matrix_of(&name, &even, &index_map(&odd), |k| op(&chain(k.0.clone(), k.1)))?;
        let d_odd = matrix_of(&name, &odd, &index_map(&even), |k| op(&chain(k.0.clone(), k.1)))?;
        let lab = |k: &(Wedge, usize)| if cochain { self.label_w(k) } else { self.label_c(k) };
        Ok(PeriodicHandle {
            name,
            even_labels: even.iter().map(lab).collect(),
            odd_labels: odd.iter().map(lab).collect(),
            even_degrees: even.iter().map(|k| k.0.len()).collect(),
            odd_degrees: odd.iter().map(|k| k.0.len()).collect(),
            d_even,
            d_odd,
        })
    }

    // ---- relative complex

    /// Coordinates of ι(Y) on W^q for each Y in `h`, stacked with ι(Y)∘d_CE.
    fn basic_constraints(&self, h: &[usize], q: usize) -> SparseMatrix {
        let src = self.basis(q);
        let mut rows_keys: Vec<(Wedge, usize)> = Vec::new();
        if q >= 1 {
            rows_keys.extend(self.basis(q - 1));
        }
        rows_keys.extend(self.basis(q));
        let idx = index_map(&rows_keys);
        let nblocks = 2 * h.len();
        let block = rows_keys.len();
        let mut cols = Vec::with_capacity(src.len());
        for k in &src {
            let x = chain(k.0.clone(), k.1);
            let dx = self.d_ce(&x);
            let mut col = SparseVec::new();
            for (b, &y) in h.iter().enumerate() {
                for (key, c) in contract_chain(y, &x) {
                    col.insert(b * block + idx[&key], c);
                }
                for (key, c) in contract_chain(y, &dx) {
                    col.insert((h.len() + b) * block + idx[&key], c);
                }
            }
            cols.push(col);
        }
        SparseMatrix::from_columns(nblocks * block, &cols)
    }

    /// Basis of the h-basic cochains in W^q: ι(Y)ω = 0 and ι(Y)d_CEω = 0.
    pub fn basic_subspace(&self, h: &[usize], q: usize) -> Vec<SparseVec> {
        kernel_basis(&self.basic_constraints(h, q))
    }

    /// Relative Chevalley–Eilenberg complex W(g,h,V) as a subcomplex, in the
    /// coordinates of its basic-subspace bases.
    pub fn relative_complex(&self, h: &[usize]) -> Result<ComplexHandle, ComplexError> {
        let n = self.n();
        let subs: Vec<Vec<SparseVec>> = (0..=n).map(|q| self.basic_subspace(h, q)).collect();
        let name = format!("W({}, h, {})", self.g.name, self.v.name);
        let mut d = Vec::new();
        for q in 0..=n {
            if q == n {
                d.push(SparseMatrix::zeros(0, subs[q].len()));
                continue;
            }
            let src = self.basis(q);
            let tgt_idx = index_map(&self.basis(q + 1));
            let dm = matrix_of(&name, &src, &tgt_idx, |k| self.d_ce(&chain(k.0.clone(), k.1)))?;
            let images: Vec<SparseVec> = subs[q].iter().map(|v| dm.mul_vec(v)).collect();
            let coords = coordinates(&subs[q + 1], &images, tgt_idx.len())
                .ok_or_else(|| ComplexError::OutOfBasis(name.clone()))?;
            d.push(SparseMatrix::from_columns(subs[q + 1].len(), &coords));
        }
        let labels = subs
            .iter()
            .enumerate()
            .map(|(q, s)| {
                let keys = self.basis(q);
                s.iter()
                    .map(|v| {
                        let el: LieChain = v.iter().map(|(i, c)| (keys[*i].clone(), c.clone())).collect();
                        self.format_w(&el)
                    })
                    .collect()
            })
            .collect();
        ComplexHandle::new(&name, labels, d, false)
    }

    /// Relative perturbed Koszul complex: d_CE + d_K on the h-basic cochains,
    /// folded into even/odd slots. Fails if d_K leaves the basic subspace.
    pub fn relative_periodic(&self, h: &[usize]) -> Result<PeriodicHandle, ComplexError> {
        let n = self.n();
        let name = format!("W({}, h, {})", self.g.name, self.v.name);
        let (even_keys, odd_keys) = self.periodic_keys();
        let (ie, io) = (index_map(&even_keys), index_map(&odd_keys));
        let mut even: Vec<LieChain> = Vec::new();
        let mut odd: Vec<LieChain> = Vec::new();
        let mut even_deg = Vec::new();
        let mut odd_deg = Vec::new();
        for q in 0..=n {
            for v in self.basic_subspace(h, q) {
                let el = self.from_vec(q, &v);
                if q % 2 == 0 {
                    even.push(el);
                    even_deg.push(q);
                } else {
                    odd.push(el);
                    odd_deg.push(q);
                }
            }
        }
        let lift = |els: &[LieChain], idx: &BTreeMap<(Wedge, usize), usize>| -> Vec<SparseVec> {
            els.iter().map(|e| e.iter().map(|(k, c)| (idx[k], c.clone())).collect()).collect()
        };
        let (even_v, odd_v) = (lift(&even, &ie), lift(&odd, &io));
        let d_even_imgs = lift(&even.iter().map(|e| self.d_total(e)).collect::<Vec<_>>(), &io);
        let d_odd_imgs = lift(&odd.iter().map(|e| self.d_total(e)).collect::<Vec<_>>(), &ie);
        let ce = coordinates(&odd_v, &d_even_imgs, odd_keys.len()).ok_or_else(|| ComplexError::OutOfBasis(name.clone()))?;
        let co = coordinates(&even_v, &d_odd_imgs, even_keys.len()).ok_or_else(|| ComplexError::OutOfBasis(name.clone()))?;
        Ok(PeriodicHandle {
            name: name.clone(),
            even_labels: even.iter().map(|e| self.format_w(e)).collect(),
            odd_labels: odd.iter().map(|e| self.format_w(e)).collect(),
            even_degrees: even_deg,
            odd_degrees: odd_deg,
            d_even: SparseMatrix::from_columns(odd.len(), &ce),
            d_odd: SparseMatrix::from_columns(even.len(), &co),
        })
    }

    pub fn to_vec(&self, q: usize, el: &LieChain) -> SparseVec {
        let idx = index_map(&self.basis(q));
        el.iter().filter_map(|(k, c)| idx.get(k).map(|i| (*i, c.clone()))).collect()
    }

    pub fn from_vec(&self, q: usize, v: &SparseVec) -> LieChain {
        let keys = self.basis(q);
        v.iter().map(|(i, c)| (keys[*i].clone(), c.clone())).collect()
    }
}

pub use crate::exact::coordinates;

pub fn contract_chain(y: usize, x: &LieChain) -> LieChain {
    let mut out = LieChain::new();
    for ((w, v), c) in x {
        if let Some((s, w2)) = wedge::contract(y, w) {
            add_to(&mut out, (w2, *v), c * qi(s));
        }
    }
    out
}

fn label(w: &[usize], names: &[String], prefix: &str, v: &str) -> String {
    if w.is_empty() {
        return v.to_string();
    }
    format!("{}⊗{}", wedge::format(w, names, prefix), v)
}

// ---- Poincaré duality W(g,V) ≅ C(g,V)

/// 𝔇(θ^I⊗v) = ε v⊗X_{I^c} where X_{I^c}∧X_I = ε ϖ.
pub fn poincare(n: usize, w: &LieChain) -> LieChain {
    let mut out = LieChain::new();
    for ((i, v), c) in w {
        let comp = wedge::complement(n, i);
        let (s, _) = wedge::mul(&comp, i).expect("disjoint");
        add_to(&mut out, (comp, *v), c * qi(s));
    }
    out
}

pub fn poincare_inv(n: usize, xi: &LieChain) -> LieChain {
    let mut out = LieChain::new();
    for ((j, v), c) in xi {
        let comp = wedge::complement(n, j);
        let (s, _) = wedge::mul(j, &comp).expect("disjoint");
        add_to(&mut out, (comp, *v), c * qi(s));
    }
    out
}

/// The sign s_q with 𝔇∘d_K = s_q ∂_K∘𝔇 on W^q, if one sign works for every
/// basis element of that degree.
pub fn koszul_conjugation_sign(c: &LieComplex, q: usize) -> Option<i64> {
    let n = c.n();
    let mut found: Option<i64> = None;
    for k in c.basis(q) {
        let x = chain(k.0, k.1);
        let lhs = poincare(n, &c.d_k(&x));
        let rhs = c.boundary_k(&poincare(n, &x));
        if lhs.is_empty() && rhs.is_empty() {
            continue;
        }
        let s = if lhs == rhs {
            1
        } else if lhs == crate::exact::scaled(&-Q::one(), &rhs) {
            -1
        } else {
            return None;
        };
        if found.is_some_and(|f| f != s) {
            return None;
        }
        found = Some(s);
    }
    Some(found.unwrap_or(1))
}

/// Antisymmetrization of X^1∧…∧X^p into U(g)^{⊗p} with weight 1/p!; `integer`
/// drops the 1/p!.
pub fn antisymmetrize_word(w: &[usize], integer: bool) -> Vec<(Vec<usize>, Q)> {
    let p = w.len();
    let mut perm: Vec<usize> = (0..p).collect();
    let norm = if integer { Q::one() } else { Q::from_integer(crate::exact::factorial(p)).recip() };
    let mut out = Vec::new();
    loop {
        let sign = crate::pbw::perm_sign(&perm);
        out.push((perm.iter().map(|&i| w[i]).collect(), &norm * qi(sign)));
        if !crate::pbw::next_permutation(&mut perm) {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::sl2_xyz;
    use crate::sayd::koszul_truncated;

    fn names_chain(c: &LieComplex, terms: &[(&[&str], &str, i64)]) -> LieChain {
        let mut out = LieChain::new();
        for (w, v, k) in terms {
            let idx: Vec<usize> = w.iter().map(|s| c.g.index_of(s).unwrap()).collect();
            let (s, w2) = wedge::sort_sign(&idx).unwrap();
            let vi = c.v.basis.iter().position(|b| b == v).unwrap();
            add_to(&mut out, (w2, vi), qi(s * k));
        }
        out
    }

    #[test]
    fn sl2_koszul_displays() {
        let g = sl2_xyz();
        let v = koszul_truncated(&g);
        let c = LieComplex::new(&g, &v);
        let x = names_chain(&c, &[(&["X"], "RZ", 1)]);
        assert_eq!(c.d_ce(&x), names_chain(&c, &[(&["X", "Z"], "RY", 1)]));
        let top = names_chain(&c, &[(&["X", "Y", "Z"], "1", 1)]);
        let expect = names_chain(&c, &[(&["Y", "Z"], "RX", 1), (&["X", "Z"], "RY", -1), (&["X", "Y"], "RZ", 1)]);
        assert_eq!(c.d_k(&top), expect);
        let y = names_chain(&c, &[(&["X"], "RZ", 2), (&["Y"], "RY", -1)]);
        assert!(c.d_k(&y).is_empty());
    }

    #[test]
    fn squares_vanish() {
        let g = sl2_xyz();
        let v = koszul_truncated(&g);
        let c = LieComplex::new(&g, &v);
        c.ce_complex().unwrap();
        c.ce_chain_complex().unwrap();
        assert!(c.koszul_periodic().unwrap().square_is_zero());
        assert!(c.cyclic_periodic().unwrap().square_is_zero());
    }

    #[test]
    fn poincare_round_trip() {
        let g = sl2_xyz();
        let v = koszul_truncated(&g);
        let c = LieComplex::new(&g, &v);
        for q in 0..=3 {
            for k in c.basis(q) {
                let x = chain(k.0.clone(), k.1);
                assert_eq!(poincare_inv(3, &poincare(3, &x)), x);
            }
        }
        // θ^Z ↦ X∧Y
        assert_eq!(poincare(3, &chain(vec![2], 0)), chain(vec![0, 1], 0));
        for q in 0..=3 {
            assert!(koszul_conjugation_sign(&c, q).is_some(), "degree {q}");
        }
    }

    #[test]
    fn antisymmetrize_two() {
        let a = antisymmetrize_word(&[0, 1], false);
        assert_eq!(a, vec![(vec![0, 1], crate::exact::q(1, 2)), (vec![1, 0], crate::exact::q(-1, 2))]);
    }

    #[test]
    fn non_sayd_controls_have_nonzero_square() {
        let g = crate::lie::sl2_efh();
        let v = crate::sayd::sl2_koszul_broken();
        assert!(v.check_ayd(&g).is_err());
        assert!(v.check_unimodular_stable().is_ok());
        let c = LieComplex::new(&g, &v);
        let r = c.d_total(&c.d_total(&chain(vec![0], 0)));
        assert_eq!(c.format_w(&r), "2*θ^e⊗Rh");

        let (v, g) = crate::sayd::abelian_unstable();
        assert!(v.check_ayd(&g).is_ok());
        assert!(v.check_unimodular_stable().is_err());
        let c = LieComplex::new(&g, &v);
        assert_eq!(c.format_w(&c.d_total(&c.d_total(&chain(vec![], 0)))), "-1");
    }

    #[test]
    fn koszul_preserves_basic_forms() {
        let g = sl2_xyz();
        let v = koszul_truncated(&g);
        let c = LieComplex::new(&g, &v);
        for q in 0..=3 {
            for b in c.basic_subspace(&[1], q) {
                let dk = c.d_k(&c.from_vec(q, &b));
                assert!(contract_chain(1, &dk).is_empty());
            }
        }
        let h = c.relative_periodic(&[1]).unwrap();
        assert!(h.square_is_zero());
    }

    #[test]
    fn relative_to_everything_is_invariants() {
        let g = sl2_xyz();
        let v = koszul_truncated(&g);
        let c = LieComplex::new(&g, &v);
        let r = c.relative_complex(&[0, 1, 2]).unwrap();
        assert_eq!(r.dims(), vec![1, 0, 0, 0]);
        assert_eq!(r.labels[0], vec!["1".to_string()]);
        let t = SaydData::trivial("C", vec!["1".into()], 3);
        let c = LieComplex::new(&g, &t);
        assert_eq!(c.relative_complex(&[0, 1, 2]).unwrap().dims(), vec![1, 0, 0, 0]);
    }
}
