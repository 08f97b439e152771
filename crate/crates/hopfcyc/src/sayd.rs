//! Coefficient modules. Lie-algebra modules/comodules are stored as matrices in
//! the row-vector convention:
//!
//! * `v^i · X_j = Σ_k B_j[i][k] v^k`
//! * `∇(v^i) = Σ_j Σ_k A^j[i][k] X_j ⊗ v^k`
//!
//! Modules over a bicrossed product carry one action matrix per Hopf generator
//! and an explicit coaction table.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::exact::{
    add_to, axpy, coordinates, dense_vec, kernel_basis, q, qi, solve_affine, sparse_vec, Echelon, Mat, SolutionSpace, SparseMatrix,
    SparseVec, Q,
};
use crate::hopf::{Bicrossed, FMono, HMono, HopfElement};
use crate::lie::{gl, gl_index, sl2_efh, sl2_xyz, LieAlgebra};
use crate::pbw::{Mono, PbwElement, PbwError, Uea};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{check} fails at {at}: residual {residual}")]
pub struct SaydViolation {
    pub check: String,
    pub at: String,
    pub residual: String,
}

fn violation(check: &str, at: String, residual: String) -> SaydViolation {
    SaydViolation { check: check.into(), at, residual }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaydData {
    pub name: String,
    pub basis: Vec<String>,
    /// One matrix per Lie algebra basis element.
    pub action: Vec<Mat>,
    /// One matrix per Lie algebra basis element.
    pub coaction: Vec<Mat>,
}

impl SaydData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn lie_dim(&self) -> usize {
        self.action.len()
    }

    pub fn trivial(name: &str, basis: Vec<String>, lie_dim: usize) -> Self {
        let d = basis.len();
        Self { name: name.into(), basis, action: vec![Mat::zeros(d, d); lie_dim], coaction: vec![Mat::zeros(d, d); lie_dim] }
    }

    fn shape_ok(&self, g: &LieAlgebra) -> Result<(), SaydViolation> {
        let d = self.dim();
        if self.action.len() != g.dim() || self.coaction.len() != g.dim() {
            return Err(violation(
                "shape",
                self.name.clone(),
                format!("{} action and {} coaction matrices for a {}-dimensional Lie algebra", self.action.len(), self.coaction.len(), g.dim()),
            ));
        }
        for m in self.action.iter().chain(&self.coaction) {
            if m.n != d || m.m != d {
                return Err(violation("shape", self.name.clone(), format!("matrix is {}x{}, expected {d}x{d}", m.n, m.m)));
            }
        }
        Ok(())
    }

    fn lincomb(&self, coeffs: impl Iterator<Item = (usize, Q)>, mats: &[Mat]) -> Mat {
        let d = self.dim();
        let mut out = Mat::zeros(d, d);
        for (s, c) in coeffs {
            out = out.add(&mats[s].scale(&c));
        }
        out
    }

    /// B_i B_j - B_j B_i = Σ_k C^k_ij B_k
    pub fn check_module(&self, g: &LieAlgebra) -> Result<(), SaydViolation> {
        self.shape_ok(g)?;
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let lhs = self.action[i].commutator(&self.action[j]);
                let rhs = self.lincomb(g.bracket_basis(i, j).iter().map(|(k, c)| (*k, c.clone())), &self.action);
                let r = lhs.sub(&rhs);
                if !r.is_zero() {
                    return Err(violation("right module", format!("({},{})", g.basis[i], g.basis[j]), r.to_string()));
                }
            }
        }
        Ok(())
    }

    /// Comodule over g iff the coaction matrices commute pairwise.
    pub fn check_lie_comodule(&self) -> Result<(), SaydViolation> {
        for i in 0..self.coaction.len() {
            for j in i + 1..self.coaction.len() {
                let r = self.coaction[i].commutator(&self.coaction[j]);
                if !r.is_zero() {
                    return Err(violation("comodule", format!("({},{})", i + 1, j + 1), r.to_string()));
                }
            }
        }
        Ok(())
    }

    /// [B_q, A^j] = Σ_s C^j_{sq} A^s
    pub fn check_ayd(&self, g: &LieAlgebra) -> Result<(), SaydViolation> {
        self.shape_ok(g)?;
        let n = g.dim();
        for q in 0..n {
            for j in 0..n {
                let lhs = self.action[q].commutator(&self.coaction[j]);
                let rhs = self.lincomb((0..n).map(|s| (s, g.constant(s, q, j))), &self.coaction);
                let r = lhs.sub(&rhs);
                if !r.is_zero() {
                    return Err(violation("AYD", format!("(q={},j={})", g.basis[q], g.basis[j]), r.to_string()));
                }
            }
        }
        Ok(())
    }

    /// Σ_j A^j B_j = 0, i.e. v<0> · v<-1> = v - v.
    pub fn check_stable(&self) -> Result<(), SaydViolation> {
        let d = self.dim();
        let mut s = Mat::zeros(d, d);
        for (a, b) in self.coaction.iter().zip(&self.action) {
            s = s.add(&a.mul(b));
        }
        if s.is_zero() {
            Ok(())
        } else {
            Err(violation("stability", self.name.clone(), s.to_string()))
        }
    }

    /// Σ_k (v · X_k) · θ^k = 0, i.e. Σ_k B_k A^k = 0.
    pub fn check_unimodular_stable(&self) -> Result<(), SaydViolation> {
        let d = self.dim();
        let mut s = Mat::zeros(d, d);
        for (a, b) in self.coaction.iter().zip(&self.action) {
            s = s.add(&b.mul(a));
        }
        if s.is_zero() {
            Ok(())
        } else {
            Err(violation("unimodular stability", self.name.clone(), s.to_string()))
        }
    }

    /// Every applicable check, in a fixed order.
    pub fn check_all(&self, g: &LieAlgebra) -> Vec<(&'static str, Result<(), SaydViolation>)> {
        vec![
            ("module", self.check_module(g)),
            ("comodule", self.check_lie_comodule()),
            ("ayd", self.check_ayd(g)),
            ("stable", self.check_stable()),
            ("unimodular-stable", self.check_unimodular_stable()),
        ]
    }

    /// Smallest n such that every product of n coaction matrices vanishes.
    /// `None` when no such n exists.
    pub fn conilpotency_index(&self) -> Option<usize> {
        let d = self.dim();
        let mut layer: Vec<Mat> = vec![Mat::identity(d)];
        for n in 1..=d + 1 {
            let mut next: Vec<Mat> = Vec::new();
            for p in &layer {
                for a in &self.coaction {
                    let m = p.mul(a);
                    if !m.is_zero() && !next.contains(&m) {
                        next.push(m);
                    }
                }
            }
            if next.is_empty() {
                return Some(n);
            }
            layer = next;
        }
        None
    }

    /// Conjugate by a change of basis: row i of `p` holds the new i-th basis
    /// vector in old coordinates.
    pub fn change_basis(&self, p: &Mat) -> Option<SaydData> {
        let pinv = p.inverse()?;
        let conj = |m: &Mat| p.mul(m).mul(&pinv);
        Some(SaydData {
            name: format!("{}'", self.name),
            basis: (0..self.dim()).map(|i| format!("w{i}")).collect(),
            action: self.action.iter().map(conj).collect(),
            coaction: self.coaction.iter().map(conj).collect(),
        })
    }

    /// Diagonal action and coaction on V ⊗ W.
    pub fn tensor(&self, other: &SaydData) -> SaydData {
        let (i1, i2) = (Mat::identity(self.dim()), Mat::identity(other.dim()));
        let combine = |a: &Mat, b: &Mat| a.kron(&i2).add(&i1.kron(b));
        let mut basis = Vec::new();
        for a in &self.basis {
            for b in &other.basis {
                basis.push(format!("{a}⊗{b}"));
            }
        }
        SaydData {
            name: format!("{}⊗{}", self.name, other.name),
            basis,
            action: self.action.iter().zip(&other.action).map(|(a, b)| combine(a, b)).collect(),
            coaction: self.coaction.iter().zip(&other.coaction).map(|(a, b)| combine(a, b)).collect(),
        }
    }

    /// Lift the g-coaction to U(g):
    /// ∇̂(v) = 1⊗v + Σ_k θ_k^{-1}(v<-k>···v<-1>) ⊗ v<0>.
    /// Entry `i` is Σ u ⊗ v^k for the basis vector v^i.
    pub fn lift_to_u(&self, u: &Uea) -> Result<Vec<UV>, LiftError> {
        let Some(index) = self.conilpotency_index() else {
            return Err(LiftError::NotConilpotent);
        };
        let d = self.dim();
        let n = self.lie_dim();
        let mut out: Vec<UV> = (0..d)
            .map(|i| {
                let mut m = UV::new();
                m.insert((u.zero_mono(), i), Q::one());
                m
            })
            .collect();
        for k in 1..index {
            // sum over ordered tuples (j_1..j_k) of X_{j_1}···X_{j_k} with matrix A^{j_1}···A^{j_k}
            let mut sums: BTreeMap<(usize, usize), PbwElement> = BTreeMap::new();
            let total = n.pow(k as u32);
            for code in 0..total {
                let mut tuple = vec![0usize; k];
                let mut c = code;
                for t in tuple.iter_mut().rev() {
                    *t = c % n;
                    c /= n;
                }
                let mut m = Mat::identity(d);
                for &j in &tuple {
                    m = m.mul(&self.coaction[j]);
                }
                if m.is_zero() {
                    continue;
                }
                let w = u.word(&tuple)?;
                for i in 0..d {
                    for l in 0..d {
                        let c = &m.a[i][l];
                        if !c.is_zero() {
                            axpy(sums.entry((i, l)).or_default(), c, &w);
                        }
                    }
                }
            }
            for ((i, l), s) in sums {
                let lifted = u.theta_inverse(k, &s)?;
                for (mono, c) in lifted {
                    add_to(&mut out[i], (mono, l), c);
                }
            }
        }
        Ok(out)
    }

    /// The submodule and subcomodule spanned by the row vectors `sub`, in the
    /// coordinates of `sub`. None when the span is not stable.
    pub fn restrict(&self, name: &str, sub: &[SparseVec]) -> Option<SaydData> {
        let d = self.dim();
        let induced = |mats: &[Mat]| -> Option<Vec<Mat>> {
            mats.iter()
                .map(|m| {
                    let images: Vec<SparseVec> = sub.iter().map(|s| m.apply_row(s)).collect();
                    let coords = coordinates(sub, &images, d)?;
                    Some(Mat::from_rows(coords.iter().map(|c| dense_vec(c, sub.len())).collect()))
                })
                .collect()
        };
        let basis = sub.iter().map(|s| crate::lie::format_combination(s.iter().map(|(i, c)| (self.basis[*i].clone(), c.clone())))).collect();
        Some(SaydData { name: name.into(), basis, action: induced(&self.action)?, coaction: induced(&self.coaction)? })
    }

    /// Increasing chain F_0 ⊆ F_1 ⊆ … with F_0 the coinvariants and
    /// F_{p+1} = {v : ∇(v) ∈ g ⊗ F_p}. Each level is a basis of row vectors.
    pub fn filtration(&self) -> Result<Filtration, SaydViolation> {
        let d = self.dim();
        let mut levels: Vec<Vec<SparseVec>> = Vec::new();
        let mut current: Vec<SparseVec> = Vec::new();
        loop {
            // annihilator of the current level (column vectors w with F_p w = 0)
            let ann = kernel_basis(&SparseMatrix::from_rows(d, current.clone()));
            let mut rows = Vec::new();
            for a in &self.coaction {
                for w in &ann {
                    let mut r = SparseVec::new();
                    for i in 0..d {
                        let mut s = Q::zero();
                        for (k, c) in w {
                            s += &a.a[i][*k] * c;
                        }
                        if !s.is_zero() {
                            r.insert(i, s);
                        }
                    }
                    if !r.is_empty() {
                        rows.push(r);
                    }
                }
            }
            let next = if rows.is_empty() {
                (0..d).map(|i| sparse_vec(&Mat::identity(d).a[i])).collect()
            } else {
                kernel_basis(&SparseMatrix::from_rows(d, rows))
            };
            if next.len() == current.len() && !levels.is_empty() {
                return Err(violation("filtration", self.name.clone(), format!("stalls at dimension {} < {d}", next.len())));
            }
            let full = next.len() == d;
            levels.push(next.clone());
            current = next;
            if full {
                return Ok(Filtration { dim: d, levels });
            }
        }
    }
}

/// Element of U(g) ⊗ V: (PBW monomial, basis index) → coefficient.
pub type UV = BTreeMap<(Mono, usize), Q>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    #[error("coaction is not locally conilpotent")]
    NotConilpotent,
    #[error("{0}")]
    Pbw(#[from] PbwError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    pub dim: usize,
    pub levels: Vec<Vec<SparseVec>>,
}

impl Filtration {
    pub fn dims(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.len()).collect()
    }

    /// dim F_j / F_{j-1}, zero beyond the top.
    pub fn graded_dim(&self, j: usize) -> usize {
        let at = |k: usize| self.levels.get(k).map_or(self.dim, |l| l.len());
        if j == 0 {
            at(0)
        } else {
            at(j) - at(j - 1)
        }
    }

    /// Smallest p with v ∈ F_p.
    pub fn level_of(&self, v: &SparseVec) -> usize {
        for (p, l) in self.levels.iter().enumerate() {
            if Echelon::from_vectors(l).contains(v) {
                return p;
            }
        }
        self.levels.len()
    }
}

/// Check coassociativity and counitality of a lifted U(g)-coaction.
pub fn check_u_comodule(u: &Uea, lift: &[UV]) -> Result<(), SaydViolation> {
    for (i, nv) in lift.iter().enumerate() {
        let mut lhs: BTreeMap<(Mono, Mono, usize), Q> = BTreeMap::new();
        let mut rhs: BTreeMap<(Mono, Mono, usize), Q> = BTreeMap::new();
        let mut counit = UV::new();
        for ((m, k), c) in nv {
            for (pair, d) in u.coproduct_mono_n(m, 2) {
                add_to(&mut lhs, (pair[0].clone(), pair[1].clone(), *k), c * d);
            }
            for ((m2, l), d) in &lift[*k] {
                add_to(&mut rhs, (m.clone(), m2.clone(), *l), c * d);
            }
            if m.iter().all(|&e| e == 0) {
                add_to(&mut counit, (m.clone(), *k), c.clone());
            }
        }
        let r = crate::exact::sub_maps(&lhs, &rhs);
        if !r.is_empty() {
            return Err(violation("U-coassociativity", format!("v{i}"), format!("{} terms", r.len())));
        }
        let mut expect = UV::new();
        expect.insert((u.zero_mono(), i), Q::one());
        if counit != expect {
            return Err(violation("U-counit", format!("v{i}"), format!("{counit:?}")));
        }
    }
    Ok(())
}

/// ∇̂(v·X) = S(X(3)) v<-1> X(1) ⊗ v<0>·X(2) for primitive X, i.e.
/// v<-1>X ⊗ v<0> + v<-1> ⊗ v<0>·X − X v<-1> ⊗ v<0>.
pub fn check_u_ayd(d: &SaydData, u: &Uea, lift: &[UV]) -> Result<(), SaydViolation> {
    let act = |v: &UV, j: usize| -> UV {
        let mut out = UV::new();
        for ((m, k), c) in v {
            for (l, b) in d.action[j].a[*k].iter().enumerate() {
                if !b.is_zero() {
                    add_to(&mut out, (m.clone(), l), c * b);
                }
            }
        }
        out
    };
    for j in 0..d.lie_dim() {
        let x = u.gen(j);
        for i in 0..d.dim() {
            let mut lhs = UV::new();
            for (l, b) in d.action[j].a[i].iter().enumerate() {
                if !b.is_zero() {
                    axpy(&mut lhs, b, &lift[l]);
                }
            }
            let mut rhs = act(&lift[i], j);
            for ((m, k), c) in &lift[i] {
                let mut me = PbwElement::new();
                me.insert(m.clone(), Q::one());
                let right = u.multiply(&me, &x).map_err(|e| violation("U-AYD", format!("v{i}"), e.to_string()))?;
                let left = u.multiply(&x, &me).map_err(|e| violation("U-AYD", format!("v{i}"), e.to_string()))?;
                for (mm, cc) in crate::exact::sub_maps(&right, &left) {
                    add_to(&mut rhs, (mm, *k), c * cc);
                }
            }
            let r = crate::exact::sub_maps(&lhs, &rhs);
            if !r.is_empty() {
                return Err(violation("U-AYD", format!("({}, {})", d.basis[i], u.lie.basis[j]), format!("{} terms", r.len())));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Solving for coactions

#[derive(Debug, Clone)]
pub struct CoactionSolution {
    pub space: SolutionSpace,
    pub dim: usize,
    pub lie_dim: usize,
    /// Quadratic (commutation) constraints that do not vanish on the linear
    /// solution space, as human-readable residuals.
    pub commutation_residuals: Vec<String>,
}

impl CoactionSolution {
    pub fn parameters(&self) -> usize {
        self.space.dim()
    }

    pub fn matrices(&self, x: &[Q]) -> Vec<Mat> {
        let d = self.dim;
        (0..self.lie_dim)
            .map(|j| {
                let mut m = Mat::zeros(d, d);
                for i in 0..d {
                    for k in 0..d {
                        m.a[i][k] = x[var(d, j, i, k)].clone();
                    }
                }
                m
            })
            .collect()
    }

    pub fn basis_matrices(&self) -> Vec<Vec<Mat>> {
        self.space.basis.iter().map(|b| self.matrices(b)).collect()
    }

    /// Whether the given coaction matrices lie in the solution space.
    pub fn contains(&self, a: &[Mat]) -> bool {
        let mut x = vec![Q::zero(); self.dim * self.dim * self.lie_dim];
        for (j, m) in a.iter().enumerate() {
            for i in 0..self.dim {
                for k in 0..self.dim {
                    x[var(self.dim, j, i, k)] = m.a[i][k].clone();
                }
            }
        }
        let e = Echelon::from_vectors(self.space.basis.iter().map(|b| sparse_vec(b)).collect::<Vec<_>>().iter());
        e.contains(&sparse_vec(&x))
    }
}

fn var(d: usize, j: usize, i: usize, k: usize) -> usize {
    j * d * d + i * d + k
}

/// Solve the AYD and stability equations (linear in A) for a fixed action.
pub fn solve_ayd_coactions(g: &LieAlgebra, action: &[Mat]) -> CoactionSolution {
    let n = g.dim();
    let d = action.first().map_or(0, |m| m.n);
    let nv = n * d * d;
    let mut rows: Vec<SparseVec> = Vec::new();
    // AYD: (B_q A^j - A^j B_q)[i][k] - Σ_s C^j_{sq} A^s[i][k] = 0
    for q in 0..n {
        let b = &action[q];
        for j in 0..n {
            for i in 0..d {
                for k in 0..d {
                    let mut r = SparseVec::new();
                    for l in 0..d {
                        add_to(&mut r, var(d, j, l, k), b.a[i][l].clone());
                        add_to(&mut r, var(d, j, i, l), -b.a[l][k].clone());
                    }
                    for s in 0..n {
                        let c = g.constant(s, q, j);
                        if !c.is_zero() {
                            add_to(&mut r, var(d, s, i, k), -c);
                        }
                    }
                    if !r.is_empty() {
                        rows.push(r);
                    }
                }
            }
        }
    }
    // stability: Σ_j (A^j B_j)[i][k] = 0
    for i in 0..d {
        for k in 0..d {
            let mut r = SparseVec::new();
            for j in 0..n {
                for l in 0..d {
                    add_to(&mut r, var(d, j, i, l), action[j].a[l][k].clone());
                }
            }
            if !r.is_empty() {
                rows.push(r);
            }
        }
    }
    let m = SparseMatrix::from_rows(nv, rows.clone());
    let rhs = vec![Q::zero(); rows.len()];
    let mut space = solve_affine(&m, &rhs).expect("homogeneous systems are consistent");
    space.parameters = (0..space.basis.len()).map(|i| format!("t{i}")).collect();
    let mut sol = CoactionSolution { space, dim: d, lie_dim: n, commutation_residuals: Vec::new() };
    let basis = sol.basis_matrices();
    // polarised commutators [A^i(a), A^j(b)] + [A^i(b), A^j(a)] must vanish
    for a in 0..basis.len() {
        for b in a..basis.len() {
            for i in 0..n {
                for j in i + 1..n {
                    let r = basis[a][i].commutator(&basis[b][j]).add(&basis[b][i].commutator(&basis[a][j]));
                    if !r.is_zero() {
                        sol.commutation_residuals.push(format!("[A^{}, A^{}] on (t{a}, t{b}): {r}", i + 1, j + 1));
                    }
                }
            }
        }
    }
    sol
}

// ---------------------------------------------------------------------------
// Built-in Lie-algebra SAYD data

/// Coadjoint action on g*: (θ·X)(W) = θ([X, W]), so B_j[θ^a][θ^b] = C^a_{jb}.
fn coadjoint(g: &LieAlgebra) -> Vec<Mat> {
    let n = g.dim();
    (0..n)
        .map(|j| {
            let mut m = Mat::zeros(n, n);
            for a in 0..n {
                for b in 0..n {
                    m.a[a][b] = g.constant(j, b, a);
                }
            }
            m
        })
        .collect()
}

/// S(g*)_[1] = C ⊕ g* with the coadjoint action and the Koszul coaction
/// 1 ↦ Σ X_i ⊗ θ^i. Basis names are `1` followed by `R<name>`.
pub fn koszul_truncated(g: &LieAlgebra) -> SaydData {
    let n = g.dim();
    let d = n + 1;
    let co = coadjoint(g);
    let mut basis = vec!["1".to_string()];
    basis.extend(g.basis.iter().map(|b| format!("R{b}")));
    let action = co
        .iter()
        .map(|c| {
            let mut m = Mat::zeros(d, d);
            for a in 0..n {
                for b in 0..n {
                    m.a[a + 1][b + 1] = c.a[a][b].clone();
                }
            }
            m
        })
        .collect();
    let coaction = (0..n)
        .map(|j| {
            let mut m = Mat::zeros(d, d);
            m.a[0][j + 1] = Q::one();
            m
        })
        .collect();
    SaydData { name: format!("S({}*)[1]", g.name), basis, action, coaction }
}

/// S(g*) truncated at polynomial degree `cap` with the Koszul coaction
/// α ↦ Σ X_i ⊗ α θ^i (terms beyond the cap dropped). Used to witness that the
/// untruncated coaction is not locally conilpotent.
pub fn koszul_symmetric(g: &LieAlgebra, cap: u32) -> SaydData {
    let n = g.dim();
    let mut monos: Vec<Vec<u32>> = Vec::new();
    for deg in 0..=cap {
        for c in crate::pbw::compositions(deg, n) {
            monos.push(c);
        }
    }
    let d = monos.len();
    let index: BTreeMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let coaction = (0..n)
        .map(|j| {
            let mut m = Mat::zeros(d, d);
            for (i, mono) in monos.iter().enumerate() {
                let mut t = mono.clone();
                t[j] += 1;
                if let Some(&k) = index.get(&t) {
                    m.a[i][k] = Q::one();
                }
            }
            m
        })
        .collect();
    let basis = monos.iter().map(|m| format!("{m:?}")).collect();
    SaydData { name: format!("S({}*)<={cap}", g.name), basis, action: vec![Mat::zeros(d, d); n], coaction }
}

/// Index of nilpotency of the Koszul coaction on S(g*) truncated at degree
/// `cap`, for cap = 1..=max. A value growing with the cap witnesses that the
/// full symmetric algebra is not locally conilpotent.
pub fn koszul_conilpotency_growth(g: &LieAlgebra, max: u32) -> Vec<Option<usize>> {
    (1..=max).map(|c| koszul_symmetric(g, c).conilpotency_index()).collect()
}

/// The (c, d) family of coactions on S(sl2*)_[1] in the basis {1, θ^e, θ^f, θ^h}.
pub fn sl2_efh_family(c: Q, d: Q) -> SaydData {
    let g = sl2_efh();
    let mut s = koszul_truncated(&g);
    s.name = format!("S(sl2*)[1](c={c},d={d})");
    let z = Mat::zeros(4, 4);
    let mut a1 = z.clone();
    a1.a[0][1] = c.clone();
    a1.a[2][0] = d.clone();
    let mut a2 = z.clone();
    a2.a[0][2] = c.clone();
    a2.a[1][0] = d.clone();
    let mut a3 = z;
    a3.a[0][3] = c;
    a3.a[3][0] = d / qi(2);
    s.coaction = vec![a1, a2, a3];
    s
}

/// The c = 1, d = 0 member of the family with the third coaction matrix set
/// to zero. Not an AYD module; kept as the negative control for W(g, V).
pub fn sl2_koszul_broken() -> SaydData {
    let mut s = sl2_efh_family(Q::one(), Q::zero());
    s.name = "S(sl2*)[1] with A3 = 0".into();
    s.coaction[2] = Mat::zeros(4, 4);
    s
}

/// ℂ over the one-dimensional abelian Lie algebra with v·X = v and ∇v = X ⊗ v.
/// AYD but not stable.
pub fn abelian_unstable() -> (SaydData, LieAlgebra) {
    let g = LieAlgebra::abelian("ab(1)", vec!["X".into()]);
    let one = Mat::from_ints(&[&[1]]);
    (SaydData { name: "C(1,1)".into(), basis: vec!["1".into()], action: vec![one.clone()], coaction: vec![one] }, g)
}

/// The 2-dimensional simple sl(2)-module (matrices e, f, h), zero coaction.
pub fn sl2_simple2() -> SaydData {
    let action = vec![
        Mat::from_ints(&[&[0, 1], &[0, 0]]),
        Mat::from_ints(&[&[0, 0], &[1, 0]]),
        Mat::from_ints(&[&[1, 0], &[0, -1]]),
    ];
    SaydData { name: "C^2".into(), basis: vec!["v1".into(), "v2".into()], action, coaction: vec![Mat::zeros(2, 2); 3] }
}

/// Exterior algebra on θ^1..θ^n, θ_1..θ_n with the coadjoint gl(n)-action
/// extended as a derivation and 1 ◁ Ŷ^p_q = −(θ^p∧θ_q + δ^p_q Σ_a θ^a∧θ_a).
pub fn v_n_proj(n: usize) -> SaydData {
    let gens = 2 * n;
    let subsets: Vec<Vec<usize>> = (0u32..(1u32 << gens))
        .map(|mask| (0..gens).filter(|b| mask & (1 << b) != 0).collect::<Vec<_>>())
        .collect::<Vec<_>>();
    let mut subsets = subsets;
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let d = subsets.len();
    let index: BTreeMap<Vec<usize>, usize> = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let name = |s: &Vec<usize>| -> String {
        if s.is_empty() {
            return "1".into();
        }
        s.iter()
            .map(|&b| if b < n { format!("t^{}", b + 1) } else { format!("t_{}", b - n + 1) })
            .collect::<Vec<_>>()
            .join("^")
    };
    // wedge a single generator into a sorted subset at position `pos`, with sign
    let replace = |s: &Vec<usize>, pos: usize, new: usize| -> Option<(i64, Vec<usize>)> {
        let mut w: Vec<usize> = s.clone();
        w[pos] = new;
        let mut sign = 1i64;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] == w[j] {
                    return None;
                }
                if w[i] > w[j] {
                    sign = -sign;
                }
            }
        }
        w.sort();
        Some((sign, w))
    };
    let g = gl(n);
    let mut action = vec![Mat::zeros(d, d); g.dim()];
    for p in 1..=n {
        for qq in 1..=n {
            let j = gl_index(n, 0, p, qq);
            for (row, s) in subsets.iter().enumerate() {
                for (pos, &b) in s.iter().enumerate() {
                    // θ^i · Y_p^q = δ^i_p θ^q ; θ_l · Y_p^q = -δ^q_l θ_p
                    let (coef, new) = if b < n {
                        if b + 1 != p {
                            continue;
                        }
                        (1, qq - 1)
                    } else {
                        if b - n + 1 != qq {
                            continue;
                        }
                        (-1, n + p - 1)
                    };
                    if let Some((sign, w)) = replace(s, pos, new) {
                        add_to_mat(&mut action[j], row, index[&w], qi(coef * sign));
                    }
                }
            }
        }
    }
    // v ◁ Ŷ^p_q = −(t^p ∧ t_q + δ^p_q Σ_a t^a ∧ t_a) ∧ v
    let mut coaction = vec![Mat::zeros(d, d); g.dim()];
    for p in 1..=n {
        for qq in 1..=n {
            let j = gl_index(n, 0, p, qq);
            let mut pairs = vec![(p - 1, n + qq - 1)];
            if p == qq {
                pairs.extend((0..n).map(|a| (a, n + a)));
            }
            for (row, s) in subsets.iter().enumerate() {
                for &(a, b) in &pairs {
                    if s.contains(&a) || s.contains(&b) {
                        continue;
                    }
                    let mut w = vec![a, b];
                    w.extend(s.iter().copied());
                    let inversions = (0..w.len()).flat_map(|x| (x + 1..w.len()).map(move |y| (x, y))).filter(|&(x, y)| w[x] > w[y]).count();
                    w.sort();
                    let sign = if inversions % 2 == 0 { -1 } else { 1 };
                    add_to_mat(&mut coaction[j], row, index[&w], qi(sign));
                }
            }
        }
    }
    SaydData { name: format!("VnProj({n})"), basis: subsets.iter().map(name).collect(), action, coaction }
}

fn add_to_mat(m: &mut Mat, i: usize, j: usize, c: Q) {
    m.a[i][j] += c;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown built-in coefficient module `{0}`")]
pub struct UnknownSayd(pub String);

/// Built-in coefficient modules with the Lie algebra they live over.
pub fn builtin_sayd(name: &str, n: Option<usize>) -> Result<(SaydData, LieAlgebra), UnknownSayd> {
    let (base, pn) = crate::lie::split_param(name);
    let n = pn.or(n);
    Ok(match base.as_str() {
        "sl2-koszul" | "schwarzian-4dim" => (koszul_truncated(&sl2_xyz()), sl2_xyz()),
        "sl2-efh-koszul" => (sl2_efh_family(Q::one(), Q::zero()), sl2_efh()),
        "sl2-simple2" => (sl2_simple2(), sl2_efh()),
        "VnProj" => {
            let n = n.filter(|&k| k >= 1).ok_or_else(|| UnknownSayd(name.into()))?;
            (v_n_proj(n), gl(n))
        }
        _ => return Err(UnknownSayd(name.into())),
    })
}

pub const BUILTIN_SAYD: &[&str] = &["sl2-koszul", "schwarzian-4dim", "sl2-efh-koszul", "sl2-simple2", "VnProj(n)"];

// ---------------------------------------------------------------------------
// Modules over a bicrossed product

/// Element of H ⊗ V.
pub type HV = BTreeMap<(HMono, usize), Q>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Twist {
    /// v ◁_δ h = (v ◁ h(1)) δ(h(2))
    Right,
    /// v ◁_δ h = δ(h(1)) (v ◁ h(2))
    Left,
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Twist::Right => "right",
            Twist::Left => "left",
        })
    }
}

/// A right H-module, left H-comodule of finite dimension. `action` holds the
/// untwisted generator matrices (F generators first, then the Lie basis);
/// `twisted` the δ-twisted ones.
#[derive(Debug, Clone)]
pub struct HModule {
    pub hopf: Arc<Bicrossed>,
    pub basis: Vec<String>,
    pub action: Vec<Mat>,
    pub twisted: Vec<Mat>,
    pub twist: Twist,
    pub coaction: Vec<HV>,
}

impl HModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn gen_matrices(&self, twisted: bool) -> &[Mat] {
        if twisted {
            &self.twisted
        } else {
            &self.action
        }
    }

    fn mono_matrix(&self, m: &HMono, twisted: bool) -> Mat {
        let gens = self.gen_matrices(twisted);
        let fm = self.hopf.f.m();
        let mut out = Mat::identity(self.dim());
        for (a, &e) in m.0.iter().enumerate() {
            for _ in 0..e {
                out = out.mul(&gens[a]);
            }
        }
        for (i, &e) in m.1.iter().enumerate() {
            for _ in 0..e {
                out = out.mul(&gens[fm + i]);
            }
        }
        out
    }

    /// Right action of an H-monomial on a vector.
    pub fn act_mono(&self, v: &SparseVec, m: &HMono, twisted: bool) -> SparseVec {
        let fm = self.hopf.f.m();
        let gens = self.gen_matrices(twisted);
        let mut out = v.clone();
        for (a, &e) in m.0.iter().enumerate() {
            for _ in 0..e {
                out = gens[a].apply_row(&out);
            }
        }
        for (i, &e) in m.1.iter().enumerate() {
            for _ in 0..e {
                out = gens[fm + i].apply_row(&out);
            }
        }
        out
    }

    pub fn act(&self, v: &SparseVec, h: &HopfElement, twisted: bool) -> SparseVec {
        let mut out = SparseVec::new();
        for (m, c) in h {
            axpy(&mut out, c, &self.act_mono(v, m, twisted));
        }
        out
    }

    pub fn act_basis(&self, i: usize, m: &HMono, twisted: bool) -> SparseVec {
        let mut e = SparseVec::new();
        e.insert(i, Q::one());
        self.act_mono(&e, m, twisted)
    }

    pub fn coact(&self, v: &SparseVec) -> HV {
        let mut out = HV::new();
        for (i, c) in v {
            axpy(&mut out, c, &self.coaction[*i]);
        }
        out
    }

    /// Recompute the twisted generator matrices for the given convention.
    pub fn retwist(&mut self, twist: Twist) {
        let h = self.hopf.clone();
        self.twist = twist;
        self.twisted = h
            .generators()
            .iter()
            .map(|(_, g)| {
                let mut m = Mat::zeros(self.dim(), self.dim());
                for (pair, c) in h.coproduct(g) {
                    let (act_part, char_part) = match twist {
                        Twist::Right => (&pair[0], &pair[1]),
                        Twist::Left => (&pair[1], &pair[0]),
                    };
                    let dl = h.delta(&h.mono_elem(char_part));
                    if dl.is_zero() {
                        continue;
                    }
                    m = m.add(&self.mono_matrix(act_part, false).scale(&(c * dl)));
                }
                m
            })
            .collect();
    }

    /// The one-dimensional module C with trivial action ε, twisted by δ, and
    /// coaction 1 ↦ σ ⊗ 1.
    pub fn character(hopf: Arc<Bicrossed>, twist: Twist) -> Self {
        let ngen = hopf.generators().len();
        let sigma = hopf.from_f(&hopf.sigma());
        let mut coaction = HV::new();
        for (m, c) in sigma {
            coaction.insert((m, 0), c);
        }
        let mut m = HModule {
            hopf,
            basis: vec!["1".into()],
            action: vec![Mat::zeros(1, 1); ngen],
            twisted: Vec::new(),
            twist,
            coaction: vec![coaction],
        };
        m.retwist(twist);
        m
    }

    pub fn format_vec(&self, v: &SparseVec) -> String {
        crate::lie::format_combination(v.iter().map(|(i, c)| (self.basis[*i].clone(), c.clone())))
    }

    pub fn format_hv(&self, t: &HV) -> String {
        crate::lie::format_combination(
            t.iter().map(|((m, i), c)| (format!("{} ⊗ {}", self.hopf.format_hmono(m), self.basis[*i]), c.clone())),
        )
    }

    fn hv_from(&self, h: &HopfElement, v: &SparseVec) -> HV {
        let mut out = HV::new();
        for (m, c) in h {
            for (i, d) in v {
                add_to(&mut out, (m.clone(), *i), c * d);
            }
        }
        out
    }

    /// Sample elements: generators and their pairwise products.
    pub fn sample_elements(&self, depth: usize) -> Vec<(String, HopfElement)> {
        let gens = self.hopf.generators();
        let mut out = gens.clone();
        if depth >= 2 {
            for (a, ga) in &gens {
                for (b, gb) in &gens {
                    out.push((format!("{a}*{b}"), self.hopf.mul(ga, gb)));
                }
            }
        }
        out
    }

    /// Relations of H hold for the generator matrices (twisted or not).
    pub fn check_module(&self, twisted: bool) -> Result<(), SaydViolation> {
        let h = &self.hopf;
        let gens = h.generators();
        for (a, ga) in &gens {
            for (b, gb) in &gens {
                // compare the action of the normal form of ga*gb with composing
                let prod = h.mul(ga, gb);
                for i in 0..self.dim() {
                    let mut e = SparseVec::new();
                    e.insert(i, Q::one());
                    let lhs = self.act(&self.act(&e, ga, twisted), gb, twisted);
                    let rhs = self.act(&e, &prod, twisted);
                    let r = crate::exact::sub_maps(&lhs, &rhs);
                    if !r.is_empty() {
                        return Err(violation(
                            if twisted { "twisted module" } else { "module" },
                            format!("({}, {a}*{b})", self.basis[i]),
                            self.format_vec(&r),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_comodule(&self) -> Result<(), SaydViolation> {
        let h = &self.hopf;
        for i in 0..self.dim() {
            let nv = &self.coaction[i];
            let mut lhs: BTreeMap<(HMono, HMono, usize), Q> = BTreeMap::new();
            let mut rhs: BTreeMap<(HMono, HMono, usize), Q> = BTreeMap::new();
            let mut cu = SparseVec::new();
            for ((m, k), c) in nv {
                for (pair, d) in h.coproduct_mono(m).iter() {
                    add_to(&mut lhs, (pair[0].clone(), pair[1].clone(), *k), c * d);
                }
                for ((m2, l), d) in &self.coaction[*k] {
                    add_to(&mut rhs, (m.clone(), m2.clone(), *l), c * d);
                }
                let e = h.counit(&h.mono_elem(m));
                if !e.is_zero() {
                    add_to(&mut cu, *k, c * e);
                }
            }
            let r = crate::exact::sub_maps(&lhs, &rhs);
            if !r.is_empty() {
                return Err(violation("coassociativity", self.basis[i].clone(), format!("{} terms", r.len())));
            }
            let mut e = SparseVec::new();
            e.insert(i, Q::one());
            if cu != e {
                return Err(violation("counit", self.basis[i].clone(), self.format_vec(&crate::exact::sub_maps(&cu, &e))));
            }
        }
        Ok(())
    }

    /// h(2)·(v◁h(1))<-1> ⊗ (v◁h(1))<0> = v<-1>h(1) ⊗ v<0>◁h(2), untwisted action.
    pub fn check_yd(&self, samples: &[(String, HopfElement)]) -> Result<(), SaydViolation> {
        let h = &self.hopf;
        for (name, x) in samples {
            let dx = h.coproduct(x);
            for i in 0..self.dim() {
                let mut e = SparseVec::new();
                e.insert(i, Q::one());
                let mut lhs = HV::new();
                let mut rhs = HV::new();
                for (pair, c) in &dx {
                    let (x1, x2) = (h.mono_elem(&pair[0]), h.mono_elem(&pair[1]));
                    let w = self.act(&e, &x1, false);
                    for ((m, k), d) in self.coact(&w) {
                        let prod = h.mul(&x2, &h.mono_elem(&m));
                        for (pm, pc) in prod {
                            add_to(&mut lhs, (pm, k), c * &d * pc);
                        }
                    }
                    for ((m, k), d) in &self.coaction[i] {
                        let prod = h.mul(&h.mono_elem(m), &x1);
                        let mut ek = SparseVec::new();
                        ek.insert(*k, Q::one());
                        let w = self.act(&ek, &x2, false);
                        axpy(&mut rhs, &(c * d), &self.hv_from(&prod, &w));
                    }
                }
                let r = crate::exact::sub_maps(&lhs, &rhs);
                if !r.is_empty() {
                    return Err(violation("YD", format!("({}, {name})", self.basis[i]), self.format_hv(&r)));
                }
            }
        }
        Ok(())
    }

    /// ∇(v◁h) = S(h(3)) v<-1> h(1) ⊗ v<0>◁h(2), twisted action.
    pub fn check_ayd(&self, samples: &[(String, HopfElement)]) -> Result<(), SaydViolation> {
        let h = &self.hopf;
        for (name, x) in samples {
            let d3 = h.coproduct_n(x, 3);
            for i in 0..self.dim() {
                let mut e = SparseVec::new();
                e.insert(i, Q::one());
                let lhs = self.coact(&self.act(&e, x, true));
                let mut rhs = HV::new();
                for (triple, c) in &d3 {
                    let s3 = h.antipode(&h.mono_elem(&triple[2]));
                    let x1 = h.mono_elem(&triple[0]);
                    let x2 = h.mono_elem(&triple[1]);
                    for ((m, k), d) in &self.coaction[i] {
                        let prod = h.mul(&h.mul(&s3, &h.mono_elem(m)), &x1);
                        let mut ek = SparseVec::new();
                        ek.insert(*k, Q::one());
                        let w = self.act(&ek, &x2, true);
                        axpy(&mut rhs, &(c * d), &self.hv_from(&prod, &w));
                    }
                }
                let r = crate::exact::sub_maps(&lhs, &rhs);
                if !r.is_empty() {
                    return Err(violation("AYD", format!("({}, {name})", self.basis[i]), self.format_hv(&r)));
                }
            }
        }
        Ok(())
    }

    /// v<0> ◁ v<-1> = v, twisted action.
    pub fn check_stable(&self) -> Result<(), SaydViolation> {
        for i in 0..self.dim() {
            let mut out = SparseVec::new();
            for ((m, k), c) in &self.coaction[i] {
                axpy(&mut out, c, &self.act_basis(*k, m, true));
            }
            let mut e = SparseVec::new();
            e.insert(i, Q::one());
            let r = crate::exact::sub_maps(&out, &e);
            if !r.is_empty() {
                return Err(violation("stability", self.basis[i].clone(), self.format_vec(&r)));
            }
        }
        Ok(())
    }

    /// The full suite: module (both actions), comodule, YD on the untwisted
    /// module, AYD and stability on the twisted one.
    pub fn check_all(&self, depth: usize) -> Vec<(&'static str, Result<(), SaydViolation>)> {
        let samples = self.sample_elements(depth);
        vec![
            ("module", self.check_module(false)),
            ("twisted-module", self.check_module(true)),
            ("comodule", self.check_comodule()),
            ("yd", self.check_yd(&samples)),
            ("ayd", self.check_ayd(&samples)),
            ("stable", self.check_stable()),
        ]
    }

    pub fn all_ok(&self, depth: usize) -> bool {
        self.check_all(depth).iter().all(|(_, r)| r.is_ok())
    }
}

/// Module over H = F ⋈ U(g1) induced from a SAYD module over g1 ⋈ g2, where
/// the F-generators are dual to the basis of g2.
#[derive(Debug, Clone)]
pub struct InducedSayd {
    pub base: SaydData,
    pub module: HModule,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InduceError {
    #[error("precondition `{0}` fails: {1}")]
    Precondition(String, SaydViolation),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0}")]
    Lift(#[from] LiftError),
    #[error("neither twist convention passes the YD and stability suite; right: {right}; left: {left}")]
    NoTwist { right: String, left: String },
}

/// Build ^σV_δ over `hopf` from `base` over the double crossed sum `g`
/// (g1 basis first, then g2). The twist convention is chosen as the one that
/// passes the full YD + stability suite, trying `Right` first.
pub fn induced_sayd(base: &SaydData, g: &LieAlgebra, hopf: Arc<Bicrossed>) -> Result<InducedSayd, InduceError> {
    let n1 = hopf.u.n();
    let n2 = hopf.f.m();
    if g.dim() != n1 + n2 || base.lie_dim() != n1 + n2 {
        return Err(InduceError::Shape(format!("{} + {} vs {}", n1, n2, g.dim())));
    }
    for (name, r) in base.check_all(g) {
        if name == "unimodular-stable" {
            continue;
        }
        r.map_err(|e| InduceError::Precondition(name.into(), e))?;
    }
    let d = base.dim();
    // U(g1)-coaction through the θ lift of the g1-part
    let g1_part = SaydData {
        name: base.name.clone(),
        basis: base.basis.clone(),
        action: base.action[..n1].to_vec(),
        coaction: base.coaction[..n1].to_vec(),
    };
    let u_lift = g1_part.lift_to_u(&hopf.u)?;
    // F-coaction: v ↦ Σ_β f^β / β! ⊗ v · Z^β
    let mut f_coact: Vec<BTreeMap<(FMono, usize), Q>> = vec![BTreeMap::new(); d];
    let mut stack: Vec<(FMono, Mat, Q)> = vec![(vec![0; n2], Mat::identity(d), Q::one())];
    while let Some((beta, m, fact)) = stack.pop() {
        for i in 0..d {
            for k in 0..d {
                if !m.a[i][k].is_zero() {
                    add_to(&mut f_coact[i], (beta.clone(), k), &m.a[i][k] / &fact);
                }
            }
        }
        // extend β only at or after its last nonzero index to enumerate each multi-index once
        let start = beta.iter().rposition(|&e| e > 0).unwrap_or(0);
        for a in start..n2 {
            let next = m.mul(&base.action[n1 + a]);
            if next.is_zero() {
                continue;
            }
            let mut b2 = beta.clone();
            b2[a] += 1;
            stack.push((b2.clone(), next, fact.clone() * Q::from_integer(b2[a].into())));
        }
    }
    let mut coaction: Vec<HV> = vec![HV::new(); d];
    for i in 0..d {
        for ((beta, k), c) in &f_coact[i] {
            for ((u, l), e) in &u_lift[*k] {
                add_to(&mut coaction[i], ((beta.clone(), u.clone()), *l), c * e);
            }
        }
    }
    let mut action: Vec<Mat> = (0..n2).map(|a| base.coaction[n1 + a].clone()).collect();
    action.extend(base.action[..n1].iter().cloned());
    let mut module = HModule {
        hopf,
        basis: base.basis.clone(),
        action,
        twisted: Vec::new(),
        twist: Twist::Right,
        coaction,
    };
    let mut failures = Vec::new();
    for t in [Twist::Right, Twist::Left] {
        module.retwist(t);
        let report = module.check_all(2);
        if report.iter().all(|(_, r)| r.is_ok()) {
            return Ok(InducedSayd { base: base.clone(), module });
        }
        failures.push(
            report.into_iter().filter_map(|(n, r)| r.err().map(|e| format!("{n}: {e}"))).collect::<Vec<_>>().join("; "),
        );
    }
    Err(InduceError::NoTwist { right: failures[0].clone(), left: failures[1].clone() })
}

/// The 4-dimensional SAYD module over H1S-cop: S(sl2*)_[1] induced along
/// sl2 = gl(1)^aff ⋈ R. Basis 1, RX, RY, RZ.
pub fn schwarzian_4dim(hopf: Arc<Bicrossed>) -> Result<InducedSayd, InduceError> {
    let g = crate::lie::sl2_matched_pair().double_crossed_sum();
    let base = koszul_truncated(&g);
    induced_sayd(&base, &g, hopf)
}

/// Rational helper for tests: 1/2.
pub fn half() -> Q {
    q(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::h1s_cop;

    #[test]
    fn koszul_efh_is_sayd() {
        let g = sl2_efh();
        for (c, d) in [(1, 0), (0, 1), (2, -3), (0, 0)] {
            let s = sl2_efh_family(qi(c), qi(d));
            s.check_module(&g).unwrap();
            s.check_ayd(&g).unwrap();
            s.check_stable().unwrap();
            s.check_unimodular_stable().unwrap();
            assert_eq!(s.check_lie_comodule().is_ok(), c * d == 0, "({c},{d})");
        }
        let mut broken = sl2_efh_family(Q::one(), Q::zero());
        broken.coaction[2] = Mat::zeros(4, 4);
        assert!(broken.check_ayd(&g).is_err());
    }

    #[test]
    fn comodule_failure_on_noncommuting() {
        let mut s = sl2_simple2();
        s.coaction[0] = Mat::from_ints(&[&[0, 1], &[0, 0]]);
        s.coaction[1] = Mat::from_ints(&[&[0, 0], &[1, 0]]);
        let e = s.check_lie_comodule().unwrap_err();
        assert_eq!(e.at, "(1,2)");
    }

    #[test]
    fn solver_counts() {
        let g = sl2_efh();
        let sol = solve_ayd_coactions(&g, &sl2_simple2().action);
        assert_eq!(sol.parameters(), 0);
        let k = sl2_efh_family(Q::one(), Q::zero());
        let sol = solve_ayd_coactions(&g, &k.action);
        assert_eq!(sol.parameters(), 2);
        // commutation cuts the family down to c*d = 0
        assert!(!sol.commutation_residuals.is_empty());
        assert!(sol.contains(&k.coaction));
        assert!(sol.contains(&sl2_efh_family(Q::zero(), Q::one()).coaction));
    }

    #[test]
    fn conilpotency() {
        let g = sl2_xyz();
        assert_eq!(SaydData::trivial("C", vec!["1".into()], 3).conilpotency_index(), Some(1));
        assert_eq!(koszul_truncated(&g).conilpotency_index(), Some(2));
        let growth = koszul_conilpotency_growth(&g, 3);
        assert_eq!(growth, vec![Some(2), Some(3), Some(4)]);
    }

    #[test]
    fn filtration_of_koszul() {
        let f = koszul_truncated(&sl2_xyz()).filtration().unwrap();
        assert_eq!(f.dims(), vec![3, 4]);
        assert_eq!(f.levels[0], vec![sparse_vec(&[qi(0), qi(1), qi(0), qi(0)]), sparse_vec(&[qi(0), qi(0), qi(1), qi(0)]), sparse_vec(&[qi(0), qi(0), qi(0), qi(1)])]);
    }

    #[test]
    fn lift_of_koszul() {
        let g = sl2_efh();
        let u = Uea::new(g.clone(), 8);
        let s = sl2_efh_family(Q::one(), Q::zero());
        let lift = s.lift_to_u(&u).unwrap();
        let one = &lift[0];
        assert_eq!(one.len(), 4);
        assert_eq!(one.get(&(u.mono(&[(0, 1)]), 1)), Some(&Q::one()));
        check_u_comodule(&u, &lift).unwrap();
        check_u_ayd(&s, &u, &lift).unwrap();
    }

    #[test]
    fn v_n_proj_checks() {
        for n in [1, 2] {
            let (v, g) = builtin_sayd("VnProj", Some(n)).unwrap();
            v.check_module(&g).unwrap();
            v.check_lie_comodule().unwrap();
            v.check_ayd(&g).unwrap();
            v.check_unimodular_stable().unwrap();
        }
    }

    #[test]
    fn schwarzian_module() {
        let h = Arc::new(h1s_cop(8));
        let v = schwarzian_4dim(h.clone()).unwrap();
        let m = &v.module;
        assert_eq!(m.twist, Twist::Right);
        assert_eq!(m.format_hv(&m.coaction[0]), "1 ⊗ 1 + Y ⊗ RY + X ⊗ RX");
        assert_eq!(m.format_hv(&m.coaction[3]), "1 ⊗ RZ + d1 ⊗ RY + 1/2*d1^2 ⊗ RX");
        let d1 = h.hmono(&[(0, 1)], &[]);
        assert_eq!(m.format_vec(&m.act_basis(0, &d1, false)), "RZ");
        let mpi = HModule::character(h.clone(), Twist::Right);
        for (name, r) in mpi.check_all(2) {
            assert!(r.is_ok(), "{name}: {r:?}");
        }
    }

    #[test]
    fn zeroed_f_action_breaks_yd() {
        let h = Arc::new(h1s_cop(8));
        let mut m = schwarzian_4dim(h).unwrap().module;
        m.action[0] = Mat::zeros(4, 4);
        let samples = m.sample_elements(1);
        let e = m.check_yd(&samples).unwrap_err();
        assert_eq!(e.at, "(1, d1)");
    }
}
