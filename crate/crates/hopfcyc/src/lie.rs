//! Finite-dimensional Lie algebras given by structure constants, matched pairs
//! and the built-in algebras.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exact::{add_to, axpy, qi, Q};

/// Element of a Lie algebra in basis coordinates.
pub type LieVec = BTreeMap<usize, Q>;

pub fn unit(i: usize) -> LieVec {
    let mut v = LieVec::new();
    v.insert(i, Q::one());
    v
}

fn combo(terms: &[(usize, i64)]) -> LieVec {
    let mut v = LieVec::new();
    for &(i, c) in terms {
        add_to(&mut v, i, qi(c));
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    pub name: String,
    pub basis: Vec<String>,
    /// `table[i][j] = [X_i, X_j]`, stored exactly as supplied.
    table: Vec<Vec<LieVec>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieViolation {
    #[error("antisymmetry fails at ({i},{j},{k}) [{names}]: C^k_ij + C^k_ji = {residual}")]
    Antisymmetry { i: usize, j: usize, k: usize, names: String, residual: Q },
    #[error("Jacobi fails at ({i},{j},{k}) [{names}]")]
    Jacobi { i: usize, j: usize, k: usize, names: String, residual: LieVec },
}

impl LieAlgebra {
    pub fn abelian(name: &str, basis: Vec<String>) -> Self {
        let n = basis.len();
        Self { name: name.into(), basis, table: vec![vec![LieVec::new(); n]; n] }
    }

    /// Build from brackets `[X_i, X_j] = v` for i != j; the opposite ordering is
    /// filled in antisymmetrically.
    pub fn from_brackets(name: &str, basis: Vec<String>, brackets: Vec<(usize, usize, LieVec)>) -> Self {
        let mut a = Self::abelian(name, basis);
        for (i, j, v) in brackets {
            let neg: LieVec = v.iter().map(|(k, c)| (*k, -c.clone())).collect();
            a.table[i][j] = v;
            a.table[j][i] = neg;
        }
        a
    }

    /// Raw structure constants `(i, j, k) -> C^k_ij`, no completion.
    pub fn from_constants(name: &str, basis: Vec<String>, constants: &[((usize, usize, usize), Q)]) -> Self {
        let mut a = Self::abelian(name, basis);
        for ((i, j, k), c) in constants {
            add_to(&mut a.table[*i][*j], *k, c.clone());
        }
        a
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &LieVec {
        &self.table[i][j]
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Q {
        self.table[i][j].get(&k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn bracket(&self, a: &LieVec, b: &LieVec) -> LieVec {
        let mut out = LieVec::new();
        for (i, x) in a {
            for (j, y) in b {
                axpy(&mut out, &(x * y), &self.table[*i][*j]);
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), LieViolation> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let r = self.constant(i, j, k) + self.constant(j, i, k);
                    if !r.is_zero() {
                        return Err(LieViolation::Antisymmetry {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            names: format!("{},{},{}", self.basis[i], self.basis[j], self.basis[k]),
                            residual: r,
                        });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (unit(i), unit(j), unit(k));
                    let mut r = self.bracket(&self.bracket(&x, &y), &z);
                    axpy(&mut r, &Q::one(), &self.bracket(&self.bracket(&y, &z), &x));
                    axpy(&mut r, &Q::one(), &self.bracket(&self.bracket(&z, &x), &y));
                    if !r.is_empty() {
                        return Err(LieViolation::Jacobi {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            names: format!("{},{},{}", self.basis[i], self.basis[j], self.basis[k]),
                            residual: r,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// delta(X_i) = sum_k C^k_{ik}
    pub fn trace_character(&self) -> Character {
        let values = (0..self.dim()).map(|i| (0..self.dim()).map(|k| self.constant(i, k, k)).sum::<Q>()).collect();
        Character { values }
    }

    pub fn format_vec(&self, v: &LieVec) -> String {
        format_combination(v.iter().map(|(i, c)| (self.basis[*i].clone(), c.clone())))
    }
}

pub fn format_combination<I: IntoIterator<Item = (String, Q)>>(terms: I) -> String {
    let mut s = String::new();
    for (label, c) in terms {
        let neg = c < Q::zero();
        let a = if neg { -c } else { c };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if label.is_empty() || label == "1" {
            s.push_str(&a.to_string());
        } else if a.is_one() {
            s.push_str(&label);
        } else {
            s.push_str(&format!("{a}*{label}"));
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<Q>,
}

impl Character {
    pub fn zero(n: usize) -> Self {
        Self { values: vec![Q::zero(); n] }
    }
    pub fn eval(&self, v: &LieVec) -> Q {
        v.iter().map(|(i, c)| c * &self.values[*i]).sum()
    }
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// Matched pair (g1, g2): g2 acts on g1 from the left (`xi |> X`) and g1 acts
/// on g2 from the right (`xi <| X`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPair {
    pub g1: LieAlgebra,
    pub g2: LieAlgebra,
    /// left[xi][X] in g1
    left: Vec<Vec<LieVec>>,
    /// right[xi][X] in g2
    right: Vec<Vec<LieVec>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("matched-pair identity {identity} fails at ({a}, {b}, {c})")]
pub struct MatchedPairViolation {
    pub identity: usize,
    pub a: String,
    pub b: String,
    pub c: String,
}

impl MatchedPair {
    pub fn new(g1: LieAlgebra, g2: LieAlgebra) -> Self {
        let (n1, n2) = (g1.dim(), g2.dim());
        Self { g1, g2, left: vec![vec![LieVec::new(); n1]; n2], right: vec![vec![LieVec::new(); n1]; n2] }
    }

    pub fn set_left(&mut self, xi: usize, x: usize, v: LieVec) {
        self.left[xi][x] = v;
    }

    pub fn set_right(&mut self, xi: usize, x: usize, v: LieVec) {
        self.right[xi][x] = v;
    }

    pub fn left_basis(&self, xi: usize, x: usize) -> &LieVec {
        &self.left[xi][x]
    }

    pub fn right_basis(&self, xi: usize, x: usize) -> &LieVec {
        &self.right[xi][x]
    }

    pub fn act_left(&self, zeta: &LieVec, x: &LieVec) -> LieVec {
        let mut out = LieVec::new();
        for (a, p) in zeta {
            for (b, r) in x {
                axpy(&mut out, &(p * r), &self.left[*a][*b]);
            }
        }
        out
    }

    pub fn act_right(&self, zeta: &LieVec, x: &LieVec) -> LieVec {
        let mut out = LieVec::new();
        for (a, p) in zeta {
            for (b, r) in x {
                axpy(&mut out, &(p * r), &self.right[*a][*b]);
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), MatchedPairViolation> {
        let (n1, n2) = (self.g1.dim(), self.g2.dim());
        let one = Q::one();
        let m1 = -Q::one();
        let fail = |id: usize, a: &str, b: &str, c: &str| MatchedPairViolation {
            identity: id,
            a: a.into(),
            b: b.into(),
            c: c.into(),
        };
        for z in 0..n2 {
            for w in 0..n2 {
                for x in 0..n1 {
                    let (zv, wv, xv) = (unit(z), unit(w), unit(x));
                    let zw = self.g2.bracket(&zv, &wv);
                    // [z,w] |> X = z |> (w |> X) - w |> (z |> X)
                    let mut r = self.act_left(&zw, &xv);
                    axpy(&mut r, &m1, &self.act_left(&zv, &self.act_left(&wv, &xv)));
                    axpy(&mut r, &one, &self.act_left(&wv, &self.act_left(&zv, &xv)));
                    if !r.is_empty() {
                        return Err(fail(1, &self.g2.basis[z], &self.g2.basis[w], &self.g1.basis[x]));
                    }
                    // [z,w] <| X = [z <| X, w] + [z, w <| X] + z <| (w |> X) - w <| (z |> X)
                    let mut r = self.act_right(&zw, &xv);
                    axpy(&mut r, &m1, &self.g2.bracket(&self.act_right(&zv, &xv), &wv));
                    axpy(&mut r, &m1, &self.g2.bracket(&zv, &self.act_right(&wv, &xv)));
                    axpy(&mut r, &m1, &self.act_right(&zv, &self.act_left(&wv, &xv)));
                    axpy(&mut r, &one, &self.act_right(&wv, &self.act_left(&zv, &xv)));
                    if !r.is_empty() {
                        return Err(fail(4, &self.g2.basis[z], &self.g2.basis[w], &self.g1.basis[x]));
                    }
                }
            }
            for x in 0..n1 {
                for y in 0..n1 {
                    let (zv, xv, yv) = (unit(z), unit(x), unit(y));
                    let xy = self.g1.bracket(&xv, &yv);
                    // z <| [X,Y] = (z <| X) <| Y - (z <| Y) <| X
                    let mut r = self.act_right(&zv, &xy);
                    axpy(&mut r, &m1, &self.act_right(&self.act_right(&zv, &xv), &yv));
                    axpy(&mut r, &one, &self.act_right(&self.act_right(&zv, &yv), &xv));
                    if !r.is_empty() {
                        return Err(fail(2, &self.g2.basis[z], &self.g1.basis[x], &self.g1.basis[y]));
                    }
                    // z |> [X,Y] = [z |> X, Y] + [X, z |> Y] + (z <| X) |> Y - (z <| Y) |> X
                    let mut r = self.act_left(&zv, &xy);
                    axpy(&mut r, &m1, &self.g1.bracket(&self.act_left(&zv, &xv), &yv));
                    axpy(&mut r, &m1, &self.g1.bracket(&xv, &self.act_left(&zv, &yv)));
                    axpy(&mut r, &m1, &self.act_left(&self.act_right(&zv, &xv), &yv));
                    axpy(&mut r, &one, &self.act_left(&self.act_right(&zv, &yv), &xv));
                    if !r.is_empty() {
                        return Err(fail(3, &self.g2.basis[z], &self.g1.basis[x], &self.g1.basis[y]));
                    }
                }
            }
        }
        Ok(())
    }

    /// g1 (+) g2 with basis g1 first, then g2.
    pub fn double_crossed_sum(&self) -> LieAlgebra {
        let (n1, n2) = (self.g1.dim(), self.g2.dim());
        let mut basis = self.g1.basis.clone();
        basis.extend(self.g2.basis.iter().cloned());
        let shift = |v: &LieVec| -> LieVec { v.iter().map(|(k, c)| (k + n1, c.clone())).collect() };
        let mut br = Vec::new();
        for i in 0..n1 {
            for j in i + 1..n1 {
                br.push((i, j, self.g1.bracket_basis(i, j).clone()));
            }
        }
        for a in 0..n2 {
            for b in a + 1..n2 {
                br.push((n1 + a, n1 + b, shift(self.g2.bracket_basis(a, b))));
            }
        }
        for a in 0..n2 {
            for x in 0..n1 {
                let mut v = self.left[a][x].clone();
                axpy(&mut v, &Q::one(), &shift(&self.right[a][x]));
                br.push((n1 + a, x, v));
            }
        }
        LieAlgebra::from_brackets(&format!("{}+{}", self.g1.name, self.g2.name), basis, br)
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {})", self.name, self.dim())?;
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let v = &self.table[i][j];
                if !v.is_empty() {
                    writeln!(f, "  [{}, {}] = {}", self.basis[i], self.basis[j], self.format_vec(v))?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Built-ins

pub fn sl2_xyz() -> LieAlgebra {
    let b = vec!["X".into(), "Y".into(), "Z".into()];
    // [Y,X]=X, [Z,X]=Y, [Z,Y]=Z
    LieAlgebra::from_brackets("sl2-xyz", b, vec![(1, 0, unit(0)), (2, 0, unit(1)), (2, 1, unit(2))])
}

pub fn sl2_efh() -> LieAlgebra {
    let b = vec!["e".into(), "f".into(), "h".into()];
    LieAlgebra::from_brackets(
        "sl2-efh",
        b,
        vec![(2, 0, combo(&[(0, 2)])), (2, 1, combo(&[(1, -2)])), (0, 1, unit(2))],
    )
}

/// Index of X_i^j (1-based i, j) inside a block of n^2 starting at `offset`.
pub fn gl_index(n: usize, offset: usize, i: usize, j: usize) -> usize {
    offset + (i - 1) * n + (j - 1)
}

fn gl_names(n: usize) -> Vec<String> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            v.push(format!("Y{i}{j}"));
        }
    }
    v
}

fn gl_brackets(n: usize, off: usize, br: &mut Vec<(usize, usize, LieVec)>) {
    // [X_i^j, X_p^q] = d^j_p X_i^q - d^q_i X_p^j
    let idx = |i, j| gl_index(n, off, i, j);
    for i in 1..=n {
        for j in 1..=n {
            for p in 1..=n {
                for q in 1..=n {
                    let (a, b) = (idx(i, j), idx(p, q));
                    if a >= b {
                        continue;
                    }
                    let mut v = LieVec::new();
                    if j == p {
                        add_to(&mut v, idx(i, q), Q::one());
                    }
                    if q == i {
                        add_to(&mut v, idx(p, j), -Q::one());
                    }
                    br.push((a, b, v));
                }
            }
        }
    }
}

/// gl(n) with basis Y{i}{j} = X_i^j.
pub fn gl(n: usize) -> LieAlgebra {
    let mut br = Vec::new();
    gl_brackets(n, 0, &mut br);
    LieAlgebra::from_brackets(&format!("gl({n})"), gl_names(n), br)
}

fn aff_brackets(n: usize, br: &mut Vec<(usize, usize, LieVec)>) {
    gl_brackets(n, n, br);
    // [X_p^q, X_s] = d^q_s X_p
    for p in 1..=n {
        for q in 1..=n {
            for s in 1..=n {
                let v = if q == s { unit(p - 1) } else { LieVec::new() };
                br.push((gl_index(n, n, p, q), s - 1, v));
            }
        }
    }
}

/// gl(n)^aff with basis X{k}, then Y{i}{j} = X_i^j.
pub fn gl_aff(n: usize) -> LieAlgebra {
    let mut names: Vec<String> = (1..=n).map(|k| format!("X{k}")).collect();
    names.extend(gl_names(n));
    let mut br = Vec::new();
    aff_brackets(n, &mut br);
    LieAlgebra::from_brackets(&format!("gl({n})-aff"), names, br)
}

/// pgl(n) with basis X{k}, Y{i}{j} = X_i^j, Z{r} = X^r.
pub fn pgl(n: usize) -> LieAlgebra {
    let mut names: Vec<String> = (1..=n).map(|k| format!("X{k}")).collect();
    names.extend(gl_names(n));
    names.extend((1..=n).map(|r| format!("Z{r}")));
    let zoff = n + n * n;
    let mut br = Vec::new();
    aff_brackets(n, &mut br);
    for r in 1..=n {
        for p in 1..=n {
            for q in 1..=n {
                // [X^r, X_p^q] = d^r_p X^q
                let v = if r == p { unit(zoff + q - 1) } else { LieVec::new() };
                br.push((zoff + r - 1, gl_index(n, n, p, q), v));
            }
        }
        for s in 1..=n {
            // [X_s, X^r] = X_s^r + d^r_s sum_a X_a^a
            let mut v = unit(gl_index(n, n, s, r));
            if r == s {
                for a in 1..=n {
                    add_to(&mut v, gl_index(n, n, a, a), Q::one());
                }
            }
            br.push((s - 1, zoff + r - 1, v));
        }
    }
    LieAlgebra::from_brackets(&format!("pgl({n})"), names, br)
}

pub fn pgl_matched_pair(n: usize) -> MatchedPair {
    let g1 = gl_aff(n);
    let g2 = LieAlgebra::abelian("m*", (1..=n).map(|r| format!("Z{r}")).collect());
    let mut mp = MatchedPair::new(g1, g2);
    for r in 1..=n {
        for k in 1..=n {
            // X^r |> X_k = -X_k^r - d^r_k sum_a X_a^a
            let mut v = LieVec::new();
            add_to(&mut v, gl_index(n, n, k, r), -Q::one());
            if r == k {
                for a in 1..=n {
                    add_to(&mut v, gl_index(n, n, a, a), -Q::one());
                }
            }
            mp.set_left(r - 1, k - 1, v);
        }
        for p in 1..=n {
            for q in 1..=n {
                // X^r <| X_p^q = d^r_p X^q
                if r == p {
                    mp.set_right(r - 1, gl_index(n, n, p, q), unit(q - 1));
                }
            }
        }
    }
    mp
}

pub fn sl2_matched_pair() -> MatchedPair {
    let g1 = LieAlgebra::from_brackets("gl(1)-aff", vec!["X".into(), "Y".into()], vec![(1, 0, unit(0))]);
    let g2 = LieAlgebra::abelian("R", vec!["Z".into()]);
    let mut mp = MatchedPair::new(g1, g2);
    mp.set_left(0, 0, unit(1)); // Z |> X = Y
    mp.set_right(0, 1, unit(0)); // Z <| Y = Z
    mp
}

#[derive(Debug, Clone)]
pub enum BuiltinLie {
    Algebra(LieAlgebra),
    Pair(MatchedPair),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown built-in `{0}`")]
pub struct UnknownBuiltin(pub String);

/// Split `name(n)` into (`name`, n). Plain names get n = None.
pub fn split_param(s: &str) -> (String, Option<usize>) {
    let s = s.trim();
    if let (Some(open), Some(close)) = (s.find('('), s.find(')')) {
        if open < close {
            if let Ok(n) = s[open + 1..close].trim().parse::<usize>() {
                let name = format!("{}{}", &s[..open], &s[close + 1..]);
                return (name, Some(n));
            }
        }
    }
    (s.to_string(), None)
}

pub fn builtin_lie(name: &str, n: Option<usize>) -> Result<BuiltinLie, UnknownBuiltin> {
    let (base, pn) = split_param(name);
    let n = pn.or(n);
    let need = |n: Option<usize>| n.filter(|&k| k >= 1).ok_or_else(|| UnknownBuiltin(name.to_string()));
    Ok(match base.as_str() {
        "sl2-xyz" | "sl2" => BuiltinLie::Algebra(sl2_xyz()),
        "sl2-efh" => BuiltinLie::Algebra(sl2_efh()),
        "gl" => BuiltinLie::Algebra(gl(need(n)?)),
        "gl-aff" => BuiltinLie::Algebra(gl_aff(need(n)?)),
        "pgl" => BuiltinLie::Algebra(pgl(need(n)?)),
        "pgl-matched-pair" => BuiltinLie::Pair(pgl_matched_pair(need(n)?)),
        "sl2-matched-pair" => BuiltinLie::Pair(sl2_matched_pair()),
        _ => return Err(UnknownBuiltin(name.to_string())),
    })
}
