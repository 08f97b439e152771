//! Exterior monomials stored as strictly increasing index lists. Every product
//! reports the sign of the sorting permutation.

/// Strictly increasing list of basis indices.
pub type Wedge = Vec<usize>;

/// θ^i ∧ θ^I, or None when i ∈ I.
pub fn insert_front(i: usize, w: &[usize]) -> Option<(i64, Wedge)> {
    match w.binary_search(&i) {
        Ok(_) => None,
        Err(pos) => {
            let mut out = w.to_vec();
            out.insert(pos, i);
            Some((if pos % 2 == 0 { 1 } else { -1 }, out))
        }
    }
}

/// θ^I ∧ θ^J
pub fn mul(a: &[usize], b: &[usize]) -> Option<(i64, Wedge)> {
    let mut sign = 1i64;
    let mut out = b.to_vec();
    for &i in a.iter().rev() {
        let (s, w) = insert_front(i, &out)?;
        sign *= s;
        out = w;
    }
    Some((sign, out))
}

/// Left contraction ι(X_i) θ^I = (−1)^pos θ^{I∖i}.
pub fn contract(i: usize, w: &[usize]) -> Option<(i64, Wedge)> {
    let pos = w.binary_search(&i).ok()?;
    let mut out = w.to_vec();
    out.remove(pos);
    Some((if pos % 2 == 0 { 1 } else { -1 }, out))
}

/// Sign that sorts an arbitrary list of distinct indices, with the sorted list.
pub fn sort_sign(v: &[usize]) -> Option<(i64, Wedge)> {
    let mut sign = 1i64;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] == v[j] {
                return None;
            }
            if v[i] > v[j] {
                sign = -sign;
            }
        }
    }
    let mut w = v.to_vec();
    w.sort_unstable();
    Some((sign, w))
}

/// All q-subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, q: usize) -> Vec<Wedge> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(q);
    fn rec(start: usize, n: usize, q: usize, cur: &mut Vec<usize>, out: &mut Vec<Wedge>) {
        if cur.len() == q {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < q - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, q, cur, out);
            cur.pop();
        }
    }
    rec(0, n, q, &mut cur, &mut out);
    out
}

/// Complement of I in 0..n.
pub fn complement(n: usize, w: &[usize]) -> Wedge {
    (0..n).filter(|i| w.binary_search(i).is_err()).collect()
}

pub fn format(w: &[usize], names: &[String], prefix: &str) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&i| format!("{prefix}{}", names[i])).collect::<Vec<_>>().join("∧")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(insert_front(1, &[0, 2]), Some((-1, vec![0, 1, 2])));
        assert_eq!(mul(&[2], &[0, 1]), Some((1, vec![0, 1, 2])));
        assert_eq!(mul(&[1, 2], &[0]), Some((1, vec![0, 1, 2])));
        assert_eq!(mul(&[1], &[1]), None);
        assert_eq!(contract(1, &[0, 1, 2]), Some((-1, vec![0, 2])));
        assert_eq!(sort_sign(&[2, 0, 1]), Some((1, vec![0, 1, 2])));
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
